#pragma once

#include "identity.hpp"
#include "registry.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>
#include <vector>

namespace zetakit::verify {

namespace detail {

inline std::string family(const std::string& id) { return id.substr(0, id.find(':')); }

inline void warm_caches() {
    (void)registry();
    (void)euler_gamma();
    (void)euler_gamma_hp();
    (void)zeta_int(2);
    (void)stieltjes_gamma1();
    (void)glaisher_log_A();
    (void)log_C();
    (void)catalan_G();
    (void)bernoulli(120);
    (void)stirling1(60, 1);
    (void)zetakit::detail::asym_consts();
    (void)zetakit::detail::hp_log_table(64);
}

inline Result evaluate(const Identity& e, double tol_scale) {
    Result r;
    r.id = e.id;
    r.paper_ref = e.paper_ref;
    r.kind = e.kind;
    r.exact = e.exact();
    r.note = e.note;
    auto t0 = std::chrono::steady_clock::now();
    try {
        if (e.exact()) {
            Rational l = e.exact_lhs(), rr = e.exact_rhs();
            r.lhs_exact = to_fraction_string(l);
            r.rhs_exact = to_fraction_string(rr);
            r.lhs = to_double(l);
            r.rhs = to_double(rr);
            r.pass = (l == rr);
            r.abs_err = r.pass ? 0.0 : std::fabs(to_double(Rational(l - rr)));
            r.tol = 0;
        } else {
            r.lhs = e.lhs();
            r.rhs = e.rhs();
            r.abs_err = std::fabs(r.lhs - r.rhs);
            r.tol = e.tol * tol_scale * (e.relative ? std::max(1.0, std::fabs(r.rhs)) : 1.0);
            r.pass = r.abs_err <= r.tol;  // false for NaN
        }
        r.rel_err = r.rhs != 0 ? r.abs_err / std::fabs(r.rhs) : r.abs_err;
    } catch (const std::exception& ex) {
        r.pass = false;
        r.lhs = r.rhs = r.abs_err = r.rel_err = std::nan("");
        r.note = std::string("error: ") + ex.what() + (r.note.empty() ? "" : "; " + r.note);
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

} // namespace detail

// Identities matching the filter, in registry order. A listed id selects that
// identity, or, when no identity has exactly that id, its family (every id of the
// form "<id>:..."). A listed tag selects everything carrying it. An empty filter
// selects everything.
inline std::vector<const Identity*> select(const Filter& f) {
    const auto& all = registry();
    for (const auto& id : f.ids) {
        bool known = std::any_of(all.begin(), all.end(), [&](const Identity& e) {
            return e.id == id || detail::family(e.id) == id;
        });
        if (!known) throw usage_error("unknown identity id: " + id);
    }
    for (const auto& t : f.tags) {
        bool known = std::any_of(all.begin(), all.end(), [&](const Identity& e) { return e.has_tag(t); });
        if (!known) throw usage_error("unknown tag: " + t);
    }
    auto exact_id = [&](const std::string& id) {
        return std::any_of(all.begin(), all.end(), [&](const Identity& e) { return e.id == id; });
    };
    std::vector<const Identity*> out;
    for (const auto& e : all) {
        bool take = f.empty();
        for (const auto& id : f.ids) take = take || e.id == id || (!exact_id(id) && detail::family(e.id) == id);
        for (const auto& t : f.tags) take = take || e.has_tag(t);
        if (take) out.push_back(&e);
    }
    return out;
}

inline std::vector<const Identity*> list(const Filter& f) { return select(f); }

inline Report run(const Filter& f, double tol_scale = 1.0, int parallelism = 1) {
    if (!(tol_scale > 0)) throw usage_error("tol_scale must be > 0");
    if (parallelism < 1) throw usage_error("parallelism must be >= 1");
    auto picked = select(f);
    detail::warm_caches();

    Report rep;
    rep.results.resize(picked.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < picked.size(); i = next++)
            rep.results[i] = detail::evaluate(*picked[i], tol_scale);
    };
    const int n = std::min<int>(parallelism, static_cast<int>(std::max<std::size_t>(picked.size(), 1)));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    rep.summary.total = static_cast<int>(rep.results.size());
    for (const auto& r : rep.results) rep.summary.passed += r.pass;
    rep.summary.failed = rep.summary.total - rep.summary.passed;
    return rep;
}

// ---- output ----

inline nlohmann::ordered_json to_json(const Report& rep) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["version"] = "1";
    j["results"] = ordered_json::array();
    auto num = [](double x) { return std::isfinite(x) ? ordered_json(x) : ordered_json(nullptr); };
    for (const auto& r : rep.results) {
        ordered_json o;
        o["id"] = r.id;
        o["paper_ref"] = r.paper_ref;
        o["kind"] = to_string(r.kind);
        if (r.exact) {
            o["lhs"] = r.lhs_exact;
            o["rhs"] = r.rhs_exact;
        } else {
            o["lhs"] = num(r.lhs);
            o["rhs"] = num(r.rhs);
        }
        o["abs_err"] = num(r.abs_err);
        o["rel_err"] = num(r.rel_err);
        o["tol"] = num(r.tol);
        o["pass"] = r.pass;
        o["note"] = r.note;
        o["seconds"] = r.seconds;
        j["results"].push_back(std::move(o));
    }
    j["summary"] = {{"total", rep.summary.total}, {"passed", rep.summary.passed}, {"failed", rep.summary.failed}};
    return j;
}

inline void write_text(std::ostream& os, const Report& rep) {
    char buf[64];
    for (const auto& r : rep.results) {
        os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id;
        std::snprintf(buf, sizeof buf, "  abs_err=%.3g  tol=%.3g", r.abs_err, r.tol);
        os << buf << "  (" << r.paper_ref << ")";
        if (!r.pass && !r.note.empty()) os << "  -- " << r.note;
        os << '\n';
    }
    os << "total=" << rep.summary.total << " passed=" << rep.summary.passed << " failed=" << rep.summary.failed
       << '\n';
}

inline void write_list(std::ostream& os, const std::vector<const Identity*>& ids) {
    char buf[32];
    for (const auto* e : ids) {
        os << e->id << "  " << to_string(e->kind);
        if (!e->exact()) {
            std::snprintf(buf, sizeof buf, "  tol=%.3g%s", e->tol, e->relative ? " (rel)" : "");
            os << buf;
        }
        os << "  (" << e->paper_ref << ")\n";
    }
}

} // namespace zetakit::verify
