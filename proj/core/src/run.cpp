#include "varbico/run.hpp"

#include <ostream>

namespace varbico {

namespace {

using nlohmann::ordered_json;

struct Status {
    bool fail = false;
    bool undecided = false;

    int exit_code() const { return fail ? 1 : (undecided ? 3 : 0); }
};

ordered_json multi_index_json(const MultiIndex& J, const Signature& sig) {
    ordered_json counts = ordered_json::object();
    for (int i = 0; i <= J.max_var(); ++i)
        if (J.count(i) > 0) counts[sig.indep_name(i)] = J.count(i);
    return counts;
}

class Executor {
public:
    Executor(const Session& session, const RunOptions& options, std::ostream& out)
        : session_(session), opts_(options), out_(out), sig_(session.signature) {}

    Status run() {
        for (const Command& cmd : session_.commands) dispatch(cmd);
        return status_;
    }

private:
    std::string value(const BiForm& form) const {
        return render_biform(form, sig_, opts_.format == Format::json ? Format::text
                                                                      : opts_.format);
    }
    std::string value(const JetPoly& poly) const {
        return render_poly(poly, sig_, opts_.format == Format::json ? Format::text
                                                                    : opts_.format);
    }

    bool json() const { return opts_.format == Format::json; }

    ordered_json json_header(const Command& cmd) const {
        ordered_json j;
        j["schema"] = "varbico-1";
        j["cmd"] = cmd.verb;
        j["args"] = cmd.args;
        return j;
    }

    std::string head(const Command& cmd) const {
        std::string out = cmd.verb;
        for (const auto& a : cmd.args) out += " " + a;
        return out;
    }

    const Definition& def(const std::string& name) const { return session_.defs.at(name); }
    const OrthonomicSystem& sys(const std::string& name) const {
        return session_.systems.at(name);
    }

    std::string witness_line(const HelmholtzWitness& w) const {
        return "gap[" + sig_.dep_name(w.row) + "][" + sig_.dep_name(w.col) + "] at D(" +
               render_multi_index(w.order, sig_) + ") = " + value(w.gap);
    }

    void dispatch(const Command& cmd) {
        if (cmd.verb == "el") run_el(cmd);
        else if (cmd.verb == "theta") run_theta(cmd);
        else if (cmd.verb == "omega") run_omega(cmd);
        else if (cmd.verb == "helmholtz") run_helmholtz(cmd);
        else if (cmd.verb == "vainberg") run_vainberg(cmd);
        else if (cmd.verb == "reduce") run_reduce(cmd);
        else if (cmd.verb == "checkomega") run_checkomega(cmd);
        else if (cmd.verb == "reconstruct") run_reconstruct(cmd);
        else if (cmd.verb == "compare") run_compare(cmd);
        else throw Defect("unvalidated command verb reached the executor");
    }

    void run_el(const Command& cmd) {
        const SourceForm el = first_variation(def(cmd.args[0]).value, sig_).el;
        if (json()) {
            ordered_json j = json_header(cmd);
            ordered_json coeffs = ordered_json::object();
            for (int a = 0; a < sig_.m(); ++a)
                coeffs[sig_.dep_name(a)] = render_poly(el.coeff(a), sig_, Format::text);
            j["el"] = coeffs;
            out_ << j.dump() << "\n";
            return;
        }
        out_ << head(cmd) << ":\n";
        for (int a = 0; a < sig_.m(); ++a)
            out_ << "  EL[" << sig_.dep_name(a) << "] = " << value(el.coeff(a)) << "\n";
    }

    void run_theta(const Command& cmd) {
        const BiForm theta = first_variation(def(cmd.args[0]).value, sig_).theta;
        if (json()) {
            ordered_json j = json_header(cmd);
            j["theta"] = biform_json(theta, sig_, "form");
            out_ << j.dump() << "\n";
            return;
        }
        out_ << head(cmd) << " = " << value(theta) << "\n";
    }

    void run_omega(const Command& cmd) {
        const BiForm omega = presymplectic_current(def(cmd.args[0]).value, sig_);
        if (json()) {
            ordered_json j = json_header(cmd);
            j["omega"] = biform_json(omega, sig_, "form");
            out_ << j.dump() << "\n";
            return;
        }
        out_ << head(cmd) << " = " << value(omega) << "\n";
    }

    void run_helmholtz(const Command& cmd) {
        const HelmholtzResult result = helmholtz_check(def(cmd.args[0]).source, sig_);
        if (!result.pass) status_.fail = true;
        if (json()) {
            ordered_json j = json_header(cmd);
            j["pass"] = result.pass;
            if (result.witness) {
                j["witness"] = {{"row", sig_.dep_name(result.witness->row)},
                                {"col", sig_.dep_name(result.witness->col)},
                                {"order", multi_index_json(result.witness->order, sig_)},
                                {"gap", render_poly(result.witness->gap, sig_, Format::text)}};
            } else {
                j["witness"] = nullptr;
            }
            out_ << j.dump() << "\n";
            return;
        }
        out_ << head(cmd) << ": " << (result.pass ? "pass" : "fail") << "\n";
        if (result.witness) out_ << "  " << witness_line(*result.witness) << "\n";
    }

    void run_vainberg(const Command& cmd) {
        const SourceForm& f = def(cmd.args[0]).source;
        const HelmholtzResult check = helmholtz_check(f, sig_);
        if (!check.pass) {
            status_.fail = true;
            if (json()) {
                ordered_json j = json_header(cmd);
                j["pass"] = false;
                j["witness"] = witness_line(*check.witness);
                out_ << j.dump() << "\n";
                return;
            }
            out_ << head(cmd) << ": fail\n  " << witness_line(*check.witness) << "\n";
            return;
        }
        const BiForm lagrangian = vainberg_lagrangian(f, sig_);
        if (json()) {
            ordered_json j = json_header(cmd);
            j["pass"] = true;
            j["lagrangian"] = biform_json(lagrangian, sig_, "lag");
            out_ << j.dump() << "\n";
            return;
        }
        out_ << head(cmd) << " = " << value(lagrangian) << "\n";
    }

    void run_reduce(const Command& cmd) {
        const ReductionCertificate cert = reduce(def(cmd.args[1]).value, sys(cmd.args[0]));
        if (json()) {
            ordered_json j = json_header(cmd);
            j["normal"] = biform_json(cert.normal, sig_, "form");
            auto multipliers = [&](const std::map<ProlongedRule, BiForm>& entries) {
                ordered_json arr = ordered_json::array();
                for (const auto& [key, form] : entries)
                    arr.push_back({{"rule", key.rule},
                                   {"J", multi_index_json(key.J, sig_)},
                                   {"value", biform_json(form, sig_, "form")}});
                return arr;
            };
            j["lambda"] = multipliers(cert.lam);
            j["mu"] = multipliers(cert.mu);
            out_ << j.dump() << "\n";
            return;
        }
        out_ << head(cmd) << ":\n";
        out_ << "  normal = " << value(cert.normal) << "\n";
        for (const auto& [key, form] : cert.lam)
            out_ << "  lambda[rule " << key.rule << ", D(" << render_multi_index(key.J, sig_)
                 << ")] = " << value(form) << "\n";
        for (const auto& [key, form] : cert.mu)
            out_ << "  mu[rule " << key.rule << ", D(" << render_multi_index(key.J, sig_)
                 << ")] = " << value(form) << "\n";
    }

    void run_checkomega(const Command& cmd) {
        const CompatibilityReport report =
            check_compatibility(def(cmd.args[1]).value, sys(cmd.args[0]));
        if (!report.compatible()) status_.fail = true;
        if (json()) {
            ordered_json j = json_header(cmd);
            j["compatible"] = report.compatible();
            j["dh_closed"] = report.dh_closed;
            j["dv_closed"] = report.dv_closed;
            j["dh_residue"] = biform_json(report.dh_certificate.normal, sig_, "form");
            j["dv_residue"] = biform_json(report.dv_certificate.normal, sig_, "form");
            out_ << j.dump() << "\n";
            return;
        }
        out_ << head(cmd) << ": "
             << (report.compatible() ? "compatible" : "incompatible") << "\n";
        if (!report.compatible()) {
            out_ << "  dh residue = " << value(report.dh_certificate.normal) << "\n";
            out_ << "  dv residue = " << value(report.dv_certificate.normal) << "\n";
        }
    }

    void run_reconstruct(const Command& cmd) {
        const OrthonomicSystem& system = sys(cmd.args[0]);
        const CompatibilityReport report =
            check_compatibility(def(cmd.args[1]).value, system);
        if (!report.compatible()) {
            status_.fail = true;
            if (json()) {
                ordered_json j = json_header(cmd);
                j["compatible"] = false;
                j["dh_residue"] = biform_json(report.dh_certificate.normal, sig_, "form");
                j["dv_residue"] = biform_json(report.dv_certificate.normal, sig_, "form");
                out_ << j.dump() << "\n";
                return;
            }
            out_ << head(cmd) << ": incompatible\n";
            out_ << "  dh residue = " << value(report.dh_certificate.normal) << "\n";
            out_ << "  dv residue = " << value(report.dv_certificate.normal) << "\n";
            return;
        }
        const ReconstructionResult result = reconstruct(report.omega_internal, system);
        if (json()) {
            ordered_json j = json_header(cmd);
            j["compatible"] = true;
            j["L"] = biform_json(result.lagrangian, sig_, "lag");
            j["theta"] = biform_json(result.theta, sig_, "form");
            j["omega"] = biform_json(result.omega, sig_, "form");
            ordered_json coeffs = ordered_json::object();
            for (int a = 0; a < sig_.m(); ++a)
                coeffs[sig_.dep_name(a)] = render_poly(result.el.coeff(a), sig_, Format::text);
            j["el"] = coeffs;
            ordered_json eps = ordered_json::array();
            for (const auto& [key, per_dep] : result.multipliers)
                for (const auto& [a, poly] : per_dep)
                    eps.push_back({{"dep", sig_.dep_name(a)},
                                   {"rule", key.rule},
                                   {"J", multi_index_json(key.J, sig_)},
                                   {"value", render_poly(poly, sig_, Format::text)}});
            j["epsilon"] = eps;
            out_ << j.dump() << "\n";
            return;
        }
        out_ << head(cmd) << ":\n";
        out_ << "  L = " << value(result.lagrangian) << "\n";
        out_ << "  theta = " << value(result.theta) << "\n";
        out_ << "  omega = " << value(result.omega) << "\n";
        for (int a = 0; a < sig_.m(); ++a)
            out_ << "  EL[" << sig_.dep_name(a) << "] = " << value(result.el.coeff(a)) << "\n";
        for (const auto& [key, per_dep] : result.multipliers)
            for (const auto& [a, poly] : per_dep)
                out_ << "  epsilon[" << sig_.dep_name(a) << "][rule " << key.rule << ", D("
                     << render_multi_index(key.J, sig_) << ")] = " << value(poly) << "\n";
    }

    void run_compare(const Command& cmd) {
        const ContainmentVerdict verdict =
            contains(def(cmd.args[0]).value, def(cmd.args[1]).value, sys(cmd.args[2]),
                     opts_.bounds);
        if (!verdict.el_contained) status_.fail = true;
        if (verdict.omega_match == OmegaMatch::undecided_within_bounds)
            status_.undecided = true;
        const char* match = verdict.omega_match == OmegaMatch::exact ? "exact"
                            : verdict.omega_match == OmegaMatch::exact_up_to_dh
                                ? "exact-up-to-dh"
                                : "undecided";
        if (json()) {
            ordered_json j = json_header(cmd);
            j["el_contained"] = verdict.el_contained;
            if (verdict.witness)
                j["witness"] = {{"dep", sig_.dep_name(verdict.witness->dep)},
                                {"residue",
                                 render_poly(verdict.witness->residue, sig_, Format::text)}};
            else
                j["witness"] = nullptr;
            j["omega_match"] = verdict.omega_match == OmegaMatch::exact ? "exact"
                               : verdict.omega_match == OmegaMatch::exact_up_to_dh
                                   ? "exact_up_to_dh"
                                   : "undecided_within_bounds";
            out_ << j.dump() << "\n";
            return;
        }
        out_ << head(cmd) << ": el " << (verdict.el_contained ? "pass" : "fail")
             << ", omega " << match << "\n";
        if (verdict.witness)
            out_ << "  EL[" << sig_.dep_name(verdict.witness->dep)
                 << "] residue = " << value(verdict.witness->residue) << "\n";
    }

    const Session& session_;
    const RunOptions& opts_;
    std::ostream& out_;
    const Signature& sig_;
    Status status_;
};

} // namespace

int run_session(const Session& session, const RunOptions& options,
                std::ostream& out, std::ostream& err) {
    try {
        for (const auto& [name, system] : session.systems) {
            const IntegrabilityReport report = check_integrability(system, options.depth);
            if (!report.pass) {
                const auto& w = *report.witness;
                err << "system '" << name << "' fails the integrability check (depth "
                    << options.depth << "): rules "
                    << w.rule_a << " and " << w.rule_b << " disagree at jet("
                    << session.signature.dep_name(w.common.dep);
                const std::string idx = render_multi_index(w.common.idx, session.signature);
                if (!idx.empty()) err << ";" << idx;
                err << "), residue "
                    << render_poly(w.difference, session.signature, Format::text) << "\n";
                return 2;
            }
        }
        return Executor(session, options, out).run().exit_code();
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace varbico
