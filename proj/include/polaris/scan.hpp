#pragma once

// Deterministic frequency-scan driver.  Points are evaluated independently
// (optionally across worker threads) and assembled in ascending-omega order,
// so the output is identical regardless of thread count.

#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "polaris/observables.hpp"

namespace polaris {

struct ScanRecord {
    double omega = 0.0;
    double tau_re = 0.0, tau_im = 0.0;
    double m_re = 0.0, m_im = 0.0;
    double m_abs2 = 0.0;
    bool near_resonance = false;
    int continuation_depth = 0;
    std::string error; // nonempty when evaluation failed at this point
};

struct ScanOptions {
    EvalOptions eval{};
    bool skip_resonances = false;
    unsigned threads = 0; // 0 = hardware concurrency
};

/// Evaluate both observables at one frequency.
inline ScanRecord evaluate_point(double omega, const EvalOptions& opt = {}) {
    ScanRecord rec;
    rec.omega = omega;
    try {
        const PhotonFrequency f(omega);
        const ComplexResponse t = tau2(f, opt);
        const ComplexResponse m = kh_matrix(f, opt);
        rec.tau_re = t.value.real();
        rec.tau_im = t.value.imag();
        rec.m_re = m.value.real();
        rec.m_im = m.value.imag();
        rec.m_abs2 = rec.m_re * rec.m_re + rec.m_im * rec.m_im;
        rec.near_resonance = t.report.near_resonance || m.report.near_resonance;
        rec.continuation_depth = std::max(t.report.depth, m.report.depth);
    } catch (const Error& e) {
        rec.error = e.what();
        rec.near_resonance = true;
    }
    return rec;
}

/// Uniform scan of [start, end] with the given number of grid points.
inline std::vector<ScanRecord> scan(double start, double end, int steps,
                                    const ScanOptions& opt = {}) {
    if (!(start > 0.0) || !(end > start))
        throw DomainError("scan requires 0 < start < end");
    if (steps < 2)
        throw DomainError("scan requires at least 2 steps");
    std::vector<ScanRecord> out(static_cast<size_t>(steps));
    const double dw = (end - start) / double(steps - 1);
    std::atomic<int> next{0};
    unsigned nthreads = opt.threads ? opt.threads
                                    : std::max(1u, std::thread::hardware_concurrency());
    nthreads = std::min<unsigned>(nthreads, static_cast<unsigned>(steps));
    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= steps) return;
            const double w = (i == steps - 1) ? end : start + dw * double(i);
            out[static_cast<size_t>(i)] = evaluate_point(w, opt.eval);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (opt.skip_resonances) {
        std::vector<ScanRecord> kept;
        kept.reserve(out.size());
        for (auto& r : out)
            if (r.error.empty() && !r.near_resonance) kept.push_back(std::move(r));
        return kept;
    }
    return out;
}

namespace fmt_detail {

inline std::string num17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace fmt_detail

inline constexpr const char* kCsvHeader =
    "omega,tau_re,tau_im,m_re,m_im,m_abs2,near_resonance,continuation_depth";

inline std::string to_csv(const std::vector<ScanRecord>& recs) {
    std::ostringstream os;
    os << kCsvHeader << '\n';
    using fmt_detail::num17;
    for (const auto& r : recs) {
        os << num17(r.omega) << ',' << num17(r.tau_re) << ',' << num17(r.tau_im)
           << ',' << num17(r.m_re) << ',' << num17(r.m_im) << ','
           << num17(r.m_abs2) << ',' << (r.near_resonance ? "true" : "false")
           << ',' << r.continuation_depth << '\n';
    }
    return os.str();
}

inline std::string to_json(const std::vector<ScanRecord>& recs) {
    std::ostringstream os;
    using fmt_detail::num17;
    os << "[\n";
    for (size_t i = 0; i < recs.size(); ++i) {
        const auto& r = recs[i];
        os << "  {\"omega\":" << num17(r.omega)
           << ",\"tau_re\":" << num17(r.tau_re)
           << ",\"tau_im\":" << num17(r.tau_im)
           << ",\"m_re\":" << num17(r.m_re)
           << ",\"m_im\":" << num17(r.m_im)
           << ",\"m_abs2\":" << num17(r.m_abs2)
           << ",\"near_resonance\":" << (r.near_resonance ? "true" : "false")
           << ",\"continuation_depth\":" << r.continuation_depth;
        if (!r.error.empty()) {
            os << ",\"error\":\"";
            for (char c : r.error) {
                if (c == '"' || c == '\\') os << '\\';
                os << c;
            }
            os << '"';
        }
        os << '}' << (i + 1 < recs.size() ? "," : "") << '\n';
    }
    os << "]\n";
    return os.str();
}

} // namespace polaris
