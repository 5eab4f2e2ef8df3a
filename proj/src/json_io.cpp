#include "mckatz/json_io.hpp"

#include <zlib.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mckatz/errors.hpp"

namespace mckatz {

namespace {

template <class F>
auto guarded(const std::string& what, F&& f) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw parse_error(what + ": " + e.what());
    }
}

Rational rat(const Json& j, const std::string& what) {
    if (!j.is_string()) throw parse_error(what + ": expected a rational string");
    return parse_rational(j.get<std::string>());
}

} // namespace

Json scalar_to_json(const CycloScalar& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(format_rational(c));
    return Json{{"conductor", s.conductor()}, {"coeffs", coeffs}};
}

CycloScalar scalar_from_json(const Json& j) {
    return guarded("scalar", [&] {
        long n = j.at("conductor").get<long>();
        if (n < 1) throw parse_error("scalar: conductor must be positive");
        const Json& cj = j.at("coeffs");
        std::vector<Rational> coeffs;
        for (const auto& c : cj) coeffs.push_back(rat(c, "scalar coefficient"));
        size_t deg = static_cast<size_t>(euler_phi(n));
        if (coeffs.size() > deg) throw parse_error("scalar: too many coefficients");
        coeffs.resize(deg, Rational(0));
        return make_cyclo(n, std::move(coeffs));
    });
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Matrix matrix_from_json(const Json& j) {
    return guarded("matrix", [&] {
        int r = j.at("rows").get<int>();
        int c = j.at("cols").get<int>();
        const Json& e = j.at("entries");
        if (r < 0 || c < 0 || static_cast<int>(e.size()) != r)
            throw parse_error("matrix: row count mismatch");
        Matrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(e[i].size()) != c)
                throw parse_error("matrix: column count mismatch");
            for (int k = 0; k < c; ++k) m.at(i, k) = scalar_from_json(e[i][k]);
        }
        return m;
    });
}

Json tuple_to_json(const MonodromyTuple& t) {
    Json mats = Json::array();
    for (const auto& m : t.matrices) mats.push_back(matrix_to_json(m));
    return Json{{"rank", t.rank}, {"points", t.points}, {"matrices", mats}};
}

MonodromyTuple tuple_from_json(const Json& j) {
    return guarded("tuple", [&] {
        MonodromyTuple t;
        t.rank = j.at("rank").get<int>();
        t.points = j.at("points").get<std::vector<std::string>>();
        for (const auto& mj : j.at("matrices")) t.matrices.push_back(matrix_from_json(mj));
        validate_tuple(t);
        return t;
    });
}

Json jordan_to_json(const JordanData& jd) {
    Json blocks = Json::array();
    for (const auto& b : jd)
        blocks.push_back(Json{{"eig", format_rational(b.eig.exponent())}, {"size", b.size}});
    return blocks;
}

JordanData jordan_from_json(const Json& j) {
    return guarded("jordan data", [&] {
        JordanData jd;
        for (const auto& bj : j) {
            JordanBlock b;
            b.eig = RootOfUnity(rat(bj.at("eig"), "eigenvalue exponent"));
            b.size = bj.at("size").get<int>();
            if (b.size < 1) throw parse_error("jordan data: block size must be positive");
            jd.push_back(b);
        }
        return jd;
    });
}

Json local_data_to_json(const LocalData& d) {
    Json pts = Json::array();
    for (const auto& jd : d.points) pts.push_back(Json{{"blocks", jordan_to_json(jd)}});
    return Json{{"rank", d.rank}, {"points", pts}};
}

LocalData local_data_from_json(const Json& j) {
    return guarded("local data", [&] {
        LocalData d;
        d.rank = j.at("rank").get<int>();
        for (const auto& pj : j.at("points")) d.points.push_back(jordan_from_json(pj.at("blocks")));
        validate_local_data(d);
        return d;
    });
}

Json script_to_json(const OpScript& s) {
    Json out = Json::array();
    for (const auto& step : s) {
        if (step.kind == OpStep::Kind::MT) {
            Json ls = Json::array();
            for (const auto& l : step.lambdas) ls.push_back(format_rational(l.exponent()));
            out.push_back(Json{{"op", "MT"}, {"lambdas", ls}});
        } else {
            out.push_back(Json{{"op", "MC"}, {"lambda", format_rational(step.lambda.exponent())}});
        }
    }
    return out;
}

OpScript script_from_json(const Json& j) {
    return guarded("script", [&] {
        OpScript s;
        for (const auto& sj : j) {
            OpStep step;
            std::string op = sj.at("op").get<std::string>();
            if (op == "MT") {
                step.kind = OpStep::Kind::MT;
                for (const auto& lj : sj.at("lambdas"))
                    step.lambdas.push_back(RootOfUnity(rat(lj, "twist exponent")));
            } else if (op == "MC") {
                step.kind = OpStep::Kind::MC;
                step.lambda = RootOfUnity(rat(sj.at("lambda"), "convolution exponent"));
            } else {
                throw parse_error("script: unknown op '" + op + "'");
            }
            s.push_back(std::move(step));
        }
        return s;
    });
}

Json operator_to_json(const ThetaOperator& l) {
    int shift = l.is_zero() ? 0 : std::min(0, l.min_power());
    if (shift < -1) throw calc_error("operator serialization expects powers >= -1");
    Json terms = Json::array();
    for (const auto& [i, p] : l.terms) {
        Json theta = Json::array();
        for (long k = 0; k <= p.degree(); ++k) theta.push_back(format_rational(p.coeff(k)));
        terms.push_back(Json{{"x", i - shift}, {"theta", theta}});
    }
    return Json{{"terms", terms}, {"x_shift", shift}};
}

ThetaOperator operator_from_json(const Json& j) {
    return guarded("operator", [&] {
        int shift = j.at("x_shift").get<int>();
        ThetaOperator l;
        for (const auto& tj : j.at("terms")) {
            int x = tj.at("x").get<int>();
            if (x < 0) throw parse_error("operator: negative term power");
            std::vector<Rational> coeffs;
            for (const auto& c : tj.at("theta")) coeffs.push_back(rat(c, "theta coefficient"));
            add_term(l, x + shift, RPoly(std::move(coeffs)));
        }
        return l;
    });
}

Json scheme_to_json(const RiemannScheme& s) {
    Json pts = Json::array();
    for (const auto& p : s) {
        Json exps = Json::array();
        for (const auto& e : p.exponents) exps.push_back(format_rational(e));
        pts.push_back(Json{{"point", p.point}, {"exponents", exps}});
    }
    return Json{{"points", pts}};
}

RiemannScheme scheme_from_json(const Json& j) {
    return guarded("scheme", [&] {
        RiemannScheme s;
        for (const auto& pj : j.at("points")) {
            SchemePoint p;
            p.point = pj.at("point").get<std::string>();
            for (const auto& e : pj.at("exponents")) p.exponents.push_back(rat(e, "exponent"));
            s.push_back(std::move(p));
        }
        return s;
    });
}

Json parse_json(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw parse_error(what + ": " + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

uint32_t crc32_bytes(const std::string& data) {
    uLong crc = crc32(0L, Z_NULL, 0);
    return static_cast<uint32_t>(
        crc32(crc, reinterpret_cast<const Bytef*>(data.data()), static_cast<uInt>(data.size())));
}

std::string golden_dir() {
    const char* env = std::getenv("MCKATZ_GOLDEN_DIR");
    return env ? std::string(env) : std::string("data/golden");
}

namespace {

MonodromyTuple catalog_tuple(const std::string& name, long conductor) {
    MonodromyTuple seed = levelt_hypergeometric(catalog::hypergeometric4_exp0(),
                                                catalog::hypergeometric4_exp_inf(), conductor);
    if (name == "seed-tuple") return seed;
    MonodromyTuple wedge = wedge_square_tuple(seed);
    if (name == "wedge-tuple") return wedge;
    MonodromyTuple rank4 = middle_convolution(wedge, RootOfUnity(Rational(1, 2)));
    if (name == "rank4-tuple") return rank4;
    MonodromyTuple sp4 = mt_twist(
        rank4, {RootOfUnity(Rational(1, 2)), RootOfUnity(), RootOfUnity(Rational(1, 2))});
    if (name == "sp4-tuple") return sp4;
    if (name == "two-j2-tuple")
        return apply_script(sp4, catalog::construction_script(), nullptr, conductor);
    throw parse_error("unknown catalog object " + name);
}

} // namespace

Json catalog_object_json(const std::string& name, long conductor) {
    if (name == "hypergeometric4") return operator_to_json(catalog::hypergeometric4());
    if (name == "selfadjoint4") return operator_to_json(catalog::selfadjoint4());
    if (name == "chain-product6") return operator_to_json(catalog::chain_product6());
    if (name == "two-j2") return operator_to_json(catalog::two_j2());
    if (name == "construction-script") return script_to_json(catalog::construction_script());
    if (name == "reduction-script") return script_to_json(catalog::reduction_script());
    if (name == "two-j2-local") return local_data_to_json(catalog::two_j2_local_data());
    if (name == "wedge-local") return local_data_to_json(catalog::wedge_local_data());
    if (name == "rank4-local") return local_data_to_json(catalog::rank4_local_data());
    if (name == "sp4-local") return local_data_to_json(catalog::sp4_local_data());
    return tuple_to_json(catalog_tuple(name, conductor));
}

Json load_golden(const std::string& filename) {
    std::string dir = golden_dir();
    std::string manifest_text = read_file(dir + "/manifest.json");
    Json manifest = parse_json(manifest_text, "golden manifest");
    std::string data = read_file(dir + "/" + filename);
    auto files = manifest.at("files");
    if (!files.contains(filename))
        throw calc_error("golden manifest has no entry for " + filename);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%08x", crc32_bytes(data));
    std::string expect = files.at(filename).get<std::string>();
    if (expect != buf)
        throw calc_error("golden file " + filename + " fails its checksum: manifest " + expect +
                         ", actual " + buf);
    return parse_json(data, "golden " + filename);
}

} // namespace mckatz
