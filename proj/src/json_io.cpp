#include "cgt/json_io.hpp"

#include <limits>

namespace cgt {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

Json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    require(j.is_string(), "integer entry must be a number or decimal string");
    try {
        return Int(j.get<std::string>());
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed integer string");
    }
}

template <class E, class ToJson>
Json certificate_to_json(const ConjugateCertificate<E>& c, ToJson&& elem) {
    Json factors = Json::array();
    for (const auto& f : c.factors)
        factors.push_back({{"conjugator", elem(f.conjugator)}, {"sign", f.sign}});
    return {{"format_version", ConjugateCertificate<E>::kFormatVersion},
            {"base", elem(c.base)},
            {"target", elem(c.target)},
            {"factors", std::move(factors)}};
}

template <class E, class FromJson>
ConjugateCertificate<E> certificate_from_json(const Json& j, FromJson&& elem) {
    require(j.is_object(), "certificate must be an object");
    require(j.contains("format_version") && j["format_version"].is_number_integer(),
            "certificate missing format_version");
    require(j["format_version"].get<int>() == ConjugateCertificate<E>::kFormatVersion,
            "unsupported certificate format_version");
    require(j.contains("base") && j.contains("target") && j.contains("factors"),
            "certificate missing base/target/factors");
    require(j["factors"].is_array(), "certificate factors must be an array");
    ConjugateCertificate<E> c{elem(j["base"]), elem(j["target"]), {}};
    for (const auto& f : j["factors"]) {
        require(f.is_object() && f.contains("conjugator") && f.contains("sign"),
                "certificate factor needs conjugator and sign");
        int sign = f["sign"].is_number_integer() ? f["sign"].get<int>() : 0;
        require(sign == 1 || sign == -1, "certificate factor sign must be 1 or -1");
        c.factors.push_back({elem(f["conjugator"]), sign});
    }
    return c;
}

}  // namespace

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json pl2_to_json(const PL2Map& f) {
    Json out = Json::array();
    for (const auto& [x, y] : f.breakpoints()) out.push_back({x.str(), y.str()});
    return out;
}

PL2Map pl2_from_json(const Json& j) {
    require(j.is_array(), "map must be an array of breakpoints");
    std::vector<Breakpoint> bps;
    for (const auto& p : j) {
        require(p.is_array() && p.size() == 2 && p[0].is_string() && p[1].is_string(),
                "breakpoint must be a [x, y] pair of dyadic strings");
        bps.emplace_back(Dyadic::parse(p[0].get<std::string>()),
                         Dyadic::parse(p[1].get<std::string>()));
    }
    return PL2Map::from_breakpoints(std::move(bps));
}

Json pl2_certificate_to_json(const ConjugateCertificate<PL2Map>& c) {
    return certificate_to_json(c, pl2_to_json);
}

ConjugateCertificate<PL2Map> pl2_certificate_from_json(const Json& j) {
    return certificate_from_json<PL2Map>(j, pl2_from_json);
}

Json pl2_commutators_to_json(const CommutatorList<PL2Map>& cs) {
    Json out = Json::array();
    for (const auto& [a, b] : cs.pairs) out.push_back({pl2_to_json(a), pl2_to_json(b)});
    return out;
}

CommutatorList<PL2Map> pl2_commutators_from_json(const Json& j) {
    require(j.is_array(), "commutator list must be an array");
    CommutatorList<PL2Map> cs;
    for (const auto& p : j) {
        require(p.is_array() && p.size() == 2, "commutator entry must be an [a, b] pair");
        cs.pairs.emplace_back(pl2_from_json(p[0]), pl2_from_json(p[1]));
    }
    return cs;
}

Json intmatrix_to_json(const IntMatrix& m) {
    Json out = Json::array();
    for (int i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(int_to_json(m.at(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

IntMatrix intmatrix_from_json(const Json& j) {
    require(j.is_array() && !j.empty(), "matrix must be a nonempty array of rows");
    int n = static_cast<int>(j.size());
    std::vector<Int> entries;
    for (const auto& row : j) {
        require(row.is_array() && static_cast<int>(row.size()) == n,
                "matrix rows must all have length n");
        for (const auto& e : row) entries.push_back(int_from_json(e));
    }
    return IntMatrix(n, std::move(entries));
}

Json mat_certificate_to_json(const ConjugateCertificate<IntMatrix>& c) {
    return certificate_to_json(c, intmatrix_to_json);
}

ConjugateCertificate<IntMatrix> mat_certificate_from_json(const Json& j) {
    return certificate_from_json<IntMatrix>(j, intmatrix_from_json);
}

Json modmatrix_to_json(const ModMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return {{"p", m.prime()}, {"entries", std::move(rows)}};
}

ModMatrix modmatrix_from_json(const Json& j) {
    require(j.is_object() && j.contains("p") && j.contains("entries"),
            "mod-p matrix needs p and entries");
    require(j["p"].is_number_integer(), "modulus p must be an integer");
    const Json& rows = j["entries"];
    require(rows.is_array() && !rows.empty(), "entries must be a nonempty array of rows");
    int n = static_cast<int>(rows.size());
    std::vector<int> entries;
    for (const auto& row : rows) {
        require(row.is_array() && static_cast<int>(row.size()) == n,
                "matrix rows must all have length n");
        for (const auto& e : row) {
            require(e.is_number_integer(), "mod-p entries must be integers");
            entries.push_back(e.get<int>());
        }
    }
    return ModMatrix(n, j["p"].get<int>(), std::move(entries));
}

Json factor_spec_to_json(const FactorSpec& spec) {
    Json out = Json::array();
    for (int o : spec.orders) {
        if (o == 0)
            out.push_back("inf");
        else
            out.push_back(o);
    }
    return out;
}

FactorSpec factor_spec_from_json(const Json& j) {
    require(j.is_array(), "factor spec must be an array of orders");
    std::vector<int> orders;
    for (const auto& o : j) {
        if (o.is_string()) {
            require(o.get<std::string>() == "inf", "order must be an integer >= 2 or \"inf\"");
            orders.push_back(0);
        } else {
            require(o.is_number_integer() && o.get<int>() >= 2,
                    "order must be an integer >= 2 or \"inf\"");
            orders.push_back(o.get<int>());
        }
    }
    return FactorSpec(std::move(orders));
}

Json fpword_to_json(const FPWord& w) {
    Json out = Json::array();
    for (const auto& s : w.syllables()) out.push_back({s.factor, s.exponent});
    return out;
}

FPWord fpword_from_json(const FactorSpec& spec, const Json& j) {
    require(j.is_array(), "word must be an array of syllables");
    std::vector<Syllable> syl;
    for (const auto& s : j) {
        require(s.is_array() && s.size() == 2 && s[0].is_number_integer() &&
                    s[1].is_number_integer(),
                "syllable must be a [factor, exponent] integer pair");
        syl.push_back({s[0].get<int>(), s[1].get<long long>()});
    }
    return FPWord(spec, std::move(syl));
}

Json z2z2_decomposition_to_json(const FactorSpec& spec, const Z2Z2Decomposition& d) {
    Json factors = Json::array();
    for (const auto& f : d.factors)
        factors.push_back({{"conjugator", fpword_to_json(f.conjugator)},
                           {"base", f.base.syllables().front().factor == 0 ? "a" : "b"}});
    return {{"format_version", ConjugateCertificate<FPWord>::kFormatVersion},
            {"spec", factor_spec_to_json(spec)},
            {"target", fpword_to_json(d.target)},
            {"factors", std::move(factors)}};
}

Z2Z2Decomposition z2z2_decomposition_from_json(const FactorSpec& spec, const Json& j) {
    require(j.is_object() && j.contains("target") && j.contains("factors"),
            "decomposition needs target and factors");
    Z2Z2Decomposition d;
    d.target = fpword_from_json(spec, j["target"]);
    require(j["factors"].is_array(), "factors must be an array");
    for (const auto& f : j["factors"]) {
        require(f.is_object() && f.contains("conjugator") && f.contains("base"),
                "factor needs conjugator and base");
        require(f["base"].is_string(), "factor base must be \"a\" or \"b\"");
        std::string base = f["base"].get<std::string>();
        require(base == "a" || base == "b", "factor base must be \"a\" or \"b\"");
        d.factors.push_back({fpword_from_json(spec, f["conjugator"]),
                             FPWord(spec, {{base == "a" ? 0 : 1, 1}})});
    }
    return d;
}

Json perm_to_json(const Perm& p) { return p.cycle_string(); }

Perm perm_from_json(const Json& j, int degree) {
    if (j.is_string()) return Perm::parse_cycles(j.get<std::string>(), degree);
    require(j.is_array(), "permutation must be a cycle string or image array");
    std::vector<int> images;
    for (const auto& v : j) {
        require(v.is_number_integer(), "image entries must be integers");
        images.push_back(v.get<int>());
    }
    require(static_cast<int>(images.size()) == degree,
            "image array length must equal the degree");
    return Perm(std::move(images));
}

Json group_spec_to_json(const FiniteGroup& g) {
    Json gens = Json::array();
    for (const auto& p : g.generators()) gens.push_back(perm_to_json(p));
    return {{"degree", g.degree()}, {"generators", std::move(gens)}};
}

FiniteGroup group_from_json(const Json& j) {
    require(j.is_object() && j.contains("degree") && j.contains("generators"),
            "group spec needs degree and generators");
    require(j["degree"].is_number_integer() && j["degree"].get<int>() >= 1,
            "degree must be a positive integer");
    int degree = j["degree"].get<int>();
    require(j["generators"].is_array(), "generators must be an array");
    std::vector<Perm> gens;
    for (const auto& g : j["generators"]) gens.push_back(perm_from_json(g, degree));
    return FiniteGroup::closure(degree, std::move(gens));
}

Json width_report_to_json(const WidthReport& r) {
    return {{"width", r.width}, {"ball_sizes", r.ball_sizes}};
}

Json fp_width_report_to_json(const FpWidthReport& r) {
    return {{"width", r.width},
            {"group_order", r.group_order},
            {"ball_sizes", r.ball_sizes}};
}

}  // namespace cgt
