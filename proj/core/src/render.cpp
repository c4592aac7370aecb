#include "varbico/render.hpp"

#include <sstream>

namespace varbico {

namespace {

std::string jet_text(const JetVar& v, const Signature& sig) {
    std::string out = "jet(" + sig.dep_name(v.dep);
    if (v.idx.order() > 0) {
        out += ";";
        bool first = true;
        for (int i = 0; i <= v.idx.max_var(); ++i)
            for (int k = 0; k < v.idx.count(i); ++k) {
                if (!first) out += ",";
                out += sig.indep_name(i);
                first = false;
            }
    }
    return out + ")";
}

std::string jet_latex(const JetVar& v, const Signature& sig) {
    std::string out = sig.dep_name(v.dep);
    if (v.idx.order() > 0) {
        out += "_{";
        bool first = true;
        for (int i = 0; i <= v.idx.max_var(); ++i)
            for (int k = 0; k < v.idx.count(i); ++k) {
                if (!first) out += " ";
                out += sig.indep_name(i);
                first = false;
            }
        out += "}";
    }
    return out;
}

std::string rational_latex(const Rational& q) {
    const Integer num = boost::multiprecision::numerator(q);
    const Integer den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    std::string sign = num < 0 ? "-" : "";
    const Integer mag = num < 0 ? Integer(-num) : num;
    return sign + "\\frac{" + mag.str() + "}{" + den.str() + "}";
}

// Monomial magnitude (assumes positive unit coefficient handled by caller).
std::string monomial_text(const Monomial& m, const Rational& abs_coeff,
                          const Signature& sig, bool latex) {
    std::vector<std::string> factors;
    if (abs_coeff != 1 || m.is_constant())
        factors.push_back(latex ? rational_latex(abs_coeff) : abs_coeff.str());
    auto power = [&](const std::string& name, int e) {
        if (e == 1) factors.push_back(name);
        else if (latex) factors.push_back(name + "^{" + std::to_string(e) + "}");
        else factors.push_back(name + "^" + std::to_string(e));
    };
    for (const auto& [i, e] : m.base_powers()) power(sig.indep_name(i), e);
    for (const auto& [v, e] : m.jet_powers())
        power(latex ? jet_latex(v, sig) : jet_text(v, sig), e);
    std::string out;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) out += latex ? " " : "*";
        out += factors[i];
    }
    return out;
}

std::string poly_text(const JetPoly& p, const Signature& sig, bool latex) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (first) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        out += monomial_text(m, mag, sig, latex);
        first = false;
    }
    return out;
}

struct TermPieces {
    bool negative = false;  // sign pulled out to the joining separator
    std::string body;
};

TermPieces biform_term_text(const GenWord& w, const JetPoly& coeff, const Signature& sig,
                            bool latex) {
    const std::string wedge_sep = latex ? " \\wedge " : " /\\ ";
    std::vector<std::string> gens;
    for (int i : w.hgen)
        gens.push_back(latex ? "\\mathrm{d}x^{" + sig.indep_name(i) + "}"
                             : "dx(" + sig.indep_name(i) + ")");
    for (const JetVar& v : w.vgen)
        gens.push_back(latex ? "\\mathrm{d}_{\\mathrm{v}}" + jet_latex(v, sig)
                             : "dv(" + jet_text(v, sig) + ")");

    std::string gen_text;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i > 0) gen_text += wedge_sep;
        gen_text += gens[i];
    }

    TermPieces out;
    if (gens.empty()) {
        out.body = poly_text(coeff, sig, latex);
        return out;
    }
    if (coeff.terms().size() == 1) {
        const auto& [m, c] = *coeff.terms().begin();
        out.negative = c < 0;
        const Rational mag = out.negative ? Rational(-c) : c;
        if (mag == 1 && m.is_constant()) {
            out.body = gen_text;
        } else {
            out.body = monomial_text(m, mag, sig, latex) + wedge_sep + gen_text;
        }
        return out;
    }
    out.body = (latex ? "\\left(" : "(") + poly_text(coeff, sig, latex) +
               (latex ? "\\right)" : ")") + wedge_sep + gen_text;
    return out;
}

std::string biform_text(const BiForm& a, const Signature& sig, bool latex) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : a.terms()) {
        TermPieces piece = biform_term_text(w, c, sig, latex);
        if (first) out += piece.negative ? "-" : "";
        else out += piece.negative ? " - " : " + ";
        out += piece.body;
        first = false;
    }
    return out;
}

nlohmann::ordered_json poly_json_string(const JetPoly& p, const Signature& sig) {
    return poly_text(p, sig, false);
}

} // namespace

std::string render_multi_index(const MultiIndex& J, const Signature& sig) {
    std::string out;
    bool first = true;
    for (int i = 0; i <= J.max_var(); ++i)
        for (int k = 0; k < J.count(i); ++k) {
            if (!first) out += ",";
            out += sig.indep_name(i);
            first = false;
        }
    return out;
}

std::string render_poly(const JetPoly& p, const Signature& sig, Format format) {
    switch (format) {
        case Format::text: return poly_text(p, sig, false);
        case Format::latex: return poly_text(p, sig, true);
        case Format::json: return poly_json_string(p, sig).dump();
    }
    throw Defect("unreachable");
}

std::string render_biform(const BiForm& a, const Signature& sig, Format format) {
    switch (format) {
        case Format::text: return biform_text(a, sig, false);
        case Format::latex: return biform_text(a, sig, true);
        case Format::json: return biform_json(a, sig, "form").dump();
    }
    throw Defect("unreachable");
}

nlohmann::ordered_json biform_json(const BiForm& a, const Signature& sig,
                                   const std::string& kind) {
    nlohmann::ordered_json out;
    out["kind"] = kind;
    auto g = a.grading();
    if (g && !a.is_zero())
        out["grading"] = {{"h", g->h}, {"v", g->v}};
    else
        out["grading"] = nullptr;
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [w, c] : a.terms()) {
        nlohmann::ordered_json term;
        term["coeff"] = poly_json_string(c, sig);
        nlohmann::ordered_json hg = nlohmann::ordered_json::array();
        for (int i : w.hgen) hg.push_back(sig.indep_name(i));
        term["hgen"] = hg;
        nlohmann::ordered_json vg = nlohmann::ordered_json::array();
        for (const JetVar& v : w.vgen) {
            nlohmann::ordered_json counts = nlohmann::ordered_json::object();
            for (int i = 0; i <= v.idx.max_var(); ++i)
                if (v.idx.count(i) > 0) counts[sig.indep_name(i)] = v.idx.count(i);
            vg.push_back({{"dep", sig.dep_name(v.dep)}, {"idx", counts}});
        }
        term["vgen"] = vg;
        terms.push_back(term);
    }
    out["terms"] = terms;
    return out;
}

} // namespace varbico
