#include "betaproof/theorem.hpp"

#include "betaproof/core_functions.hpp"
#include "betaproof/hp_eval.hpp"
#include "betaproof/replay.hpp"
#include "betaproof/special.hpp"

#include <future>
#include <stdexcept>
#include <thread>

#include <cstdio>

namespace betaproof::proof {

std::string csv_line(const SweepRow& r) {
    char buf[320];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g", r.x, r.y, r.beta, r.new_bound,
                  r.ivady_lower, r.alzer_lower, r.margin_new, r.margin_ivady);
    return buf;
}

namespace {

struct Partial {
    HPFloat min_new, min_ivady_lower, min_ivady_upper, min_alzer_lower, min_alzer_upper;
    int arg_i = 0, arg_j = 0;
    std::size_t beats = 0;
    bool empty = true;
};

// Row i of the grid: j = 1..n.
Partial sweep_row(int i, int n, const std::vector<HPFloat>& lg, const HPFloat& alpha, const HPFloat& budget,
                  std::vector<SweepRow>* rows) {
    const mpfr_prec_t bits = budget.bits();
    Partial p;
    const HPFloat x(Rational(i, n), bits);
    for (int j = 1; j <= n; ++j) {
        const HPFloat y(Rational(j, n), bits);
        const HPFloat b = exp(lg[i] + lg[j] - lg[i + j]);
        const HPFloat nb = new_bound(x, y);
        const HPFloat il = ivady_lower(x, y);
        const HPFloat al = alzer_lower(x, y, alpha);
        const HPFloat m_new = b - nb;
        const HPFloat m_il = b - il;
        const HPFloat m_iu = ivady_upper(x, y) - b;
        const HPFloat m_al = b - al;
        const HPFloat m_au = alzer_upper(x, y) - b;
        if (nb - il > budget) ++p.beats;
        if (p.empty) {
            p.min_new = m_new;
            p.min_ivady_lower = m_il;
            p.min_ivady_upper = m_iu;
            p.min_alzer_lower = m_al;
            p.min_alzer_upper = m_au;
            p.arg_i = i;
            p.arg_j = j;
            p.empty = false;
        } else {
            if (m_new < p.min_new) {
                p.min_new = m_new;
                p.arg_i = i;
                p.arg_j = j;
            }
            p.min_ivady_lower = min(p.min_ivady_lower, m_il);
            p.min_ivady_upper = min(p.min_ivady_upper, m_iu);
            p.min_alzer_lower = min(p.min_alzer_lower, m_al);
            p.min_alzer_upper = min(p.min_alzer_upper, m_au);
        }
        if (rows)
            rows->push_back({x.to_double(), y.to_double(), b.to_double(), nb.to_double(), il.to_double(),
                             al.to_double(), m_new.to_double(), m_il.to_double()});
    }
    return p;
}

void merge(SweepSummary& s, const Partial& p, bool first) {
    if (first) {
        s.min_margin_new = p.min_new;
        s.argmin_x = Rational(p.arg_i, s.grid_n);
        s.argmin_y = Rational(p.arg_j, s.grid_n);
        s.min_margin_ivady_lower = p.min_ivady_lower;
        s.min_margin_ivady_upper = p.min_ivady_upper;
        s.min_margin_alzer_lower = p.min_alzer_lower;
        s.min_margin_alzer_upper = p.min_alzer_upper;
    } else {
        // rows arrive in order, so strict comparison keeps the first minimiser
        if (p.min_new < s.min_margin_new) {
            s.min_margin_new = p.min_new;
            s.argmin_x = Rational(p.arg_i, s.grid_n);
            s.argmin_y = Rational(p.arg_j, s.grid_n);
        }
        s.min_margin_ivady_lower = min(s.min_margin_ivady_lower, p.min_ivady_lower);
        s.min_margin_ivady_upper = min(s.min_margin_ivady_upper, p.min_ivady_upper);
        s.min_margin_alzer_lower = min(s.min_margin_alzer_lower, p.min_alzer_lower);
        s.min_margin_alzer_upper = min(s.min_margin_alzer_upper, p.min_alzer_upper);
    }
    s.new_beats_ivady += p.beats;
}

}  // namespace

SweepSummary sweep_theorem(int n, const Precision& prec, const std::function<void(const SweepRow&)>& sink,
                           unsigned threads) {
    if (n < 2) throw std::invalid_argument("grid_n must be ≥ 2");
    const mpfr_prec_t bits = prec.bits();
    std::vector<HPFloat> lg;
    lg.reserve(2 * static_cast<std::size_t>(n) + 1);
    lg.emplace_back(bits);
    for (int k = 1; k <= 2 * n; ++k) lg.push_back(special::log_gamma(HPFloat(Rational(k, n), bits)));

    SweepSummary s;
    s.grid_n = n;
    s.cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    s.alpha = special::compute_constants(prec).alpha;
    threads = std::max(1u, threads);
    const HPFloat budget = error_budget(prec);

    const bool keep = static_cast<bool>(sink);
    for (int start = 1; start <= n; start += static_cast<int>(threads)) {
        const int stop = std::min(n, start + static_cast<int>(threads) - 1);
        const std::size_t count = static_cast<std::size_t>(stop - start + 1);
        std::vector<std::vector<SweepRow>> rows(count);
        std::vector<Partial> parts(count);
        if (threads == 1) {
            parts[0] = sweep_row(start, n, lg, s.alpha, budget, keep ? &rows[0] : nullptr);
        } else {
            std::vector<std::thread> pool;
            for (std::size_t k = 0; k < count; ++k)
                pool.emplace_back([&, k] {
                    parts[k] = sweep_row(start + static_cast<int>(k), n, lg, s.alpha, budget, keep ? &rows[k] : nullptr);
                });
            for (auto& t : pool) t.join();
        }
        for (std::size_t k = 0; k < count; ++k) {
            merge(s, parts[k], start == 1 && k == 0);
            if (keep)
                for (const auto& r : rows[k]) sink(r);
        }
    }
    return s;
}

namespace {

std::vector<ProofStep> theorem_steps(const Precision& prec) {
    std::vector<ProofStep> out;
    {
        StepBuilder b("theorem.grid-audit", "sampled: B(x,y) exceeds the new bound on the 25 x 25 grid of (0,1]^2",
                      Method::HighPrecision, prec);
        b.depends("case1.conclusion").depends("case2.conclusion");
        const auto s = sweep_theorem(25, prec);
        b.note("sampling", true).note("argmin", s.argmin_x.str() + "," + s.argmin_y.str());
        b.positive("min_margin_new", s.min_margin_new);
        const HPFloat one(1L, prec);
        b.vanishes("margin(1,1)-1/3", theorem_margin(one, one) - HPFloat(Rational(1, 3), prec));
        const HPFloat half(Rational(1, 2), prec);
        b.vanishes("margin(1/2,1/2)-(pi-3)", theorem_margin(half, half) - (pi(prec.bits()) - 3L));
        b.vanishes("B(1,1)-ivady_upper(1,1)", special::beta(one, one) - ivady_upper(one, one));
        b.vanishes("B(1,1)-ivady_lower(1,1)", special::beta(one, one) - ivady_lower(one, one));
        out.push_back(b.build());
    }
    {
        StepBuilder b("theorem.small-x", "F(x,y) -> 0 as x -> 0: F(1e-6, y) < 1e-4 for y = 0.3, 0.7, 1, and F >= 0",
                      Method::HighPrecision, prec);
        const HPFloat x(Rational(1, 1000000), prec);
        const HPFloat cap(Rational(1, 10000), prec);
        const HPFloat budget = error_budget(prec);
        bool nonneg = true;
        for (const auto& [label, yr] : {std::pair{"0.3", Rational(3, 10)}, std::pair{"0.7", Rational(7, 10)},
                                        std::pair{"1", Rational(1)}}) {
            const HPFloat v = theorem_log_margin(x, HPFloat(yr, prec));
            // F(1e-6, 1) is about 5e-13, below the budget at low precision
            nonneg = nonneg && v >= -budget;
            b.note(std::string("F(1e-6,") + label + ")", decimal(v));
            b.positive(std::string("1e-4-F(1e-6,") + label + ")", cap - v);
        }
        b.exact("F_nonnegative_within_budget", nonneg);
        out.push_back(b.build());
    }
    return out;
}

}  // namespace

std::vector<ProofStep> replay_all(const ReplayOptions& opts) {
    using Group = std::vector<ProofStep> (*)(const ReplayOptions&);
    static constexpr Group kGroups[] = {replay_lemmas, replay_lemma23, replay_case1, replay_case2,
                                        [](const ReplayOptions& o) { return theorem_steps(o.prec); }};
    std::vector<std::vector<ProofStep>> results;
    if (opts.threads > 1) {
        std::vector<std::future<std::vector<ProofStep>>> futures;
        for (Group g : kGroups) futures.push_back(std::async(std::launch::async, g, std::cref(opts)));
        for (auto& f : futures) results.push_back(f.get());
    } else {
        for (Group g : kGroups) results.push_back(g(opts));
    }
    std::vector<ProofStep> out;
    for (auto& r : results)
        for (auto& s : r) out.push_back(std::move(s));
    return out;
}

}  // namespace betaproof::proof
