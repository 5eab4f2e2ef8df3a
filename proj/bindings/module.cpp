// Python face of the library.  Structured values cross the boundary as JSON
// strings in the same encodings the CLI uses; exponent rationals are plain
// "p/q" strings.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mckatz/catalog.hpp"
#include "mckatz/errors.hpp"
#include "mckatz/json_io.hpp"
#include "mckatz/pipeline.hpp"
#include "mckatz/rigidity.hpp"
#include "mckatz/theta_op.hpp"
#include "mckatz/tuples.hpp"

namespace py = pybind11;
using namespace mckatz;

namespace {

std::string dump(const Json& j) { return j.dump(2); }

MonodromyTuple tuple_arg(const std::string& text) {
    return tuple_from_json(parse_json(text, "tuple"));
}

ThetaOperator op_arg(const std::string& text) {
    return operator_from_json(parse_json(text, "operator"));
}

LocalData local_arg(const std::string& text, long conductor) {
    Json j = parse_json(text, "local data");
    if (j.is_object() && j.contains("matrices"))
        return local_data_of(tuple_from_json(j), conductor);
    return local_data_from_json(j);
}

std::vector<Rational> rational_list(const std::vector<std::string>& items) {
    std::vector<Rational> out;
    for (const auto& s : items) out.push_back(parse_rational(s));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact middle-convolution calculus on monodromy tuples and theta-form "
              "differential operators (JSON-string interface)";

    py::register_exception<parse_error>(m, "ParseError");
    py::register_exception<calc_error>(m, "CalcError");

    m.def(
        "middle_convolution",
        [](const std::string& t, const std::string& lambda) {
            return dump(tuple_to_json(
                middle_convolution(tuple_arg(t), RootOfUnity(parse_rational(lambda)))));
        },
        py::arg("tuple_json"), py::arg("lambda_exponent"));

    m.def(
        "scalar_twist",
        [](const std::string& t, const std::vector<std::string>& lambdas) {
            std::vector<RootOfUnity> ls;
            for (const auto& q : rational_list(lambdas)) ls.push_back(RootOfUnity(q));
            return dump(tuple_to_json(mt_twist(tuple_arg(t), ls)));
        },
        py::arg("tuple_json"), py::arg("lambda_exponents"));

    m.def(
        "wedge_square",
        [](const std::string& t) { return dump(tuple_to_json(wedge_square_tuple(tuple_arg(t)))); },
        py::arg("tuple_json"));

    m.def(
        "levelt",
        [](const std::vector<std::string>& exp0, const std::vector<std::string>& exp_inf,
           long conductor) {
            return dump(tuple_to_json(
                levelt_hypergeometric(rational_list(exp0), rational_list(exp_inf), conductor)));
        },
        py::arg("exp0"), py::arg("exp_inf"), py::arg("conductor") = 60);

    m.def(
        "is_irreducible", [](const std::string& t) { return is_irreducible(tuple_arg(t)); },
        py::arg("tuple_json"));

    m.def(
        "equivalent",
        [](const std::string& a, const std::string& b) {
            return equivalent(tuple_arg(a), tuple_arg(b)).equivalent;
        },
        py::arg("tuple_json_a"), py::arg("tuple_json_b"));

    m.def(
        "invariant_forms",
        [](const std::string& t, const std::string& kind) {
            FormKind k;
            if (kind == "bilinear")
                k = FormKind::Bilinear;
            else if (kind == "sesquilinear")
                k = FormKind::Sesquilinear;
            else
                throw parse_error("form kind must be bilinear or sesquilinear");
            Json out = Json::array();
            for (const auto& g : invariant_form(tuple_arg(t).matrices, k))
                out.push_back(matrix_to_json(g));
            return dump(out);
        },
        py::arg("tuple_json"), py::arg("kind"));

    m.def(
        "local_data",
        [](const std::string& t, long conductor) {
            return dump(local_data_to_json(local_data_of(tuple_arg(t), conductor)));
        },
        py::arg("tuple_json"), py::arg("conductor") = 60);

    m.def(
        "mc_numerology",
        [](const std::string& d, const std::string& lambda, long conductor) {
            NumerologyResult r =
                mc_numerology(local_arg(d, conductor), RootOfUnity(parse_rational(lambda)));
            return dump(Json{{"new_rank", r.new_rank},
                             {"predicted", local_data_to_json(r.predicted)}});
        },
        py::arg("local_json"), py::arg("lambda_exponent"), py::arg("conductor") = 60);

    m.def(
        "scott_bound",
        [](const std::string& d, long conductor) {
            RigidityReport r = scott_and_indices(local_arg(d, conductor));
            return dump(Json{{"cent_dims", r.cent_dims},
                             {"sum", r.sum},
                             {"bound", r.bound},
                             {"linearly_rigid", r.linearly_rigid}});
        },
        py::arg("local_json"), py::arg("conductor") = 60);

    m.def(
        "katz_reduce",
        [](const std::string& d, int max_steps, long conductor) {
            KatzReduction red = katz_reduce(local_arg(d, conductor), max_steps);
            Json steps = Json::array();
            for (const auto& st : red.steps)
                steps.push_back({{"lambda", format_rational(st.lambda.exponent())},
                                 {"rank_after", st.rank_after}});
            return dump(Json{{"steps", steps},
                             {"final", local_data_to_json(red.final_data)},
                             {"reached_rank_one", red.reached_rank_one}});
        },
        py::arg("local_json"), py::arg("max_steps") = 32, py::arg("conductor") = 60);

    m.def(
        "convolution_ca",
        [](const std::string& l, const std::string& a) {
            return dump(operator_to_json(convolution_ca(op_arg(l), parse_rational(a))));
        },
        py::arg("operator_json"), py::arg("a"));

    m.def(
        "shift_theta",
        [](const std::string& l, const std::string& a) {
            return dump(operator_to_json(shift_theta(op_arg(l), parse_rational(a))));
        },
        py::arg("operator_json"), py::arg("a"));

    m.def(
        "adjoint", [](const std::string& l) { return dump(operator_to_json(adjoint(op_arg(l)))); },
        py::arg("operator_json"));

    m.def(
        "multiply",
        [](const std::string& a, const std::string& b) {
            return dump(operator_to_json(op_mul(op_arg(a), op_arg(b))));
        },
        py::arg("operator_json_a"), py::arg("operator_json_b"));

    m.def(
        "divide_left",
        [](const std::string& l, const std::vector<std::string>& coeffs) {
            return dump(operator_to_json(divide_left_theta(op_arg(l), RPoly(rational_list(coeffs)))));
        },
        py::arg("operator_json"), py::arg("factor_coefficients"));

    m.def(
        "riemann_scheme",
        [](const std::string& l) { return dump(scheme_to_json(riemann_scheme(op_arg(l)))); },
        py::arg("operator_json"));

    m.def(
        "equal_up_to_scalar",
        [](const std::string& a, const std::string& b) {
            return op_equal_normalized(op_arg(a), op_arg(b));
        },
        py::arg("operator_json_a"), py::arg("operator_json_b"));

    m.def(
        "remark_family",
        [](const std::string& a1, const std::string& c1, const std::string& c2,
           const std::string& c3) {
            Rational ra = parse_rational(a1), r1 = parse_rational(c1), r2 = parse_rational(c2),
                     r3 = parse_rational(c3);
            return dump(Json{
                {"l4", operator_to_json(catalog::two_j2_family_seed(ra, r1, r2, r3))},
                {"l6", operator_to_json(catalog::two_j2_family(ra, r1, r2, r3))}});
        },
        py::arg("a1"), py::arg("c1"), py::arg("c2"), py::arg("c3"));

    m.def(
        "catalog",
        [](const std::string& name, long conductor) {
            return dump(catalog_object_json(name, conductor));
        },
        py::arg("name"), py::arg("conductor") = 60);

    m.def(
        "reproduce",
        [](int stage, bool use_golden, bool timings) {
            PipelineOptions opt;
            opt.up_to_stage = stage;
            opt.use_golden = use_golden;
            opt.timings = timings;
            PipelineReport rep = run_pipeline(opt);
            return py::make_tuple(rep.ok, dump(pipeline_to_json(rep)));
        },
        py::arg("stage") = 8, py::arg("use_golden") = true, py::arg("timings") = false);
}
