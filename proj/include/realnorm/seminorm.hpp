#pragma once

#include <future>
#include <optional>
#include <string>
#include <vector>

#include "realnorm/curvegeom.hpp"

namespace realnorm {

enum class SeminormalVerdict { centrally_seminormal, not_centrally_seminormal, unsupported };

inline const char* to_string(SeminormalVerdict v) {
  switch (v) {
    case SeminormalVerdict::centrally_seminormal: return "centrally-seminormal";
    case SeminormalVerdict::not_centrally_seminormal: return "not-centrally-seminormal";
    case SeminormalVerdict::unsupported: return "unsupported";
  }
  return "unknown";
}

enum class Condition { ordinary, real, totally_real };

inline const char* to_string(Condition c) {
  switch (c) {
    case Condition::ordinary: return "C1-ordinary";
    case Condition::real: return "C2-real";
    case Condition::totally_real: return "C3-totally-real";
  }
  return "unknown";
}

struct PointEvidence {
  SingularityReport report;
  std::vector<Condition> failed;
};

struct SeminormalityCertificate {
  SeminormalVerdict verdict = SeminormalVerdict::unsupported;
  std::vector<PointEvidence> points;
  std::size_t nonreal_singular_count = 0;
  /// Conditions failing globally rather than at a listed point.
  std::vector<Condition> global_failures;
  std::optional<std::string> note;
  std::string unsupported_reason;
};

inline const char* const kWcScNote = "for curves X^{s_c} = X^{w_c}";

/// Recomputes the verdict from the evidence alone.
inline SeminormalVerdict verdict_from_evidence(const SeminormalityCertificate& c) {
  if (c.verdict == SeminormalVerdict::unsupported) return SeminormalVerdict::unsupported;
  if (c.nonreal_singular_count > 0) return SeminormalVerdict::not_centrally_seminormal;
  for (const auto& p : c.points)
    if (p.report.classification != SingularityClass::real_node) return SeminormalVerdict::not_centrally_seminormal;
  return SeminormalVerdict::centrally_seminormal;
}

/// Failed conditions at one real singular point, read off its tangent cone.
inline std::vector<Condition> failed_conditions(const SingularityReport& r) {
  std::vector<Condition> out;
  switch (r.classification) {
    case SingularityClass::real_node:
    case SingularityClass::smooth: break;
    case SingularityClass::complex_node: out.push_back(Condition::totally_real); break;
    case SingularityClass::non_ordinary:
      out.push_back(Condition::ordinary);
      if (r.real_tangents < r.distinct_tangents) out.push_back(Condition::totally_real);
      break;
    case SingularityClass::unsupported_irrational: break;
  }
  return out;
}

inline SeminormalityCertificate is_centrally_seminormal(const AffinePresentation& x, const SolveOptions& opts = {}) {
  if (x.kind != PresentationKind::plane_curve) {
    throw Error(ErrorKind::precondition, "seminormality is decided for plane curves only");
  }
  SeminormalityCertificate cert;
  if (!x.asserted.irreducible || !x.asserted.smooth_real_point) {
    cert.verdict = SeminormalVerdict::unsupported;
    cert.unsupported_reason = !x.asserted.irreducible ? "irreducibility not asserted" : "no smooth real point asserted";
    return cert;
  }
  if (!x.asserted.squarefree_checked) throw Error(ErrorKind::precondition, "curve equation not checked squarefree");
  auto locus = singular_points(x, opts);
  cert.nonreal_singular_count = locus.nonreal;
  if (locus.nonreal > 0) cert.global_failures.push_back(Condition::real);
  std::vector<std::future<SingularityReport>> jobs;
  for (const auto& sp : locus.real_points)
    jobs.push_back(std::async(std::launch::async, [&x, &sp] { return classify_singularity(x, sp); }));
  for (auto& j : jobs) {
    PointEvidence ev{j.get(), {}};
    ev.failed = failed_conditions(ev.report);
    cert.points.push_back(std::move(ev));
  }
  cert.verdict = SeminormalVerdict::not_centrally_seminormal;
  cert.verdict = verdict_from_evidence(cert);
  return cert;
}

/// Same decision; for curves the central seminormalization and the central
/// weak normalization coincide.
inline SeminormalityCertificate is_centrally_weakly_normal(const AffinePresentation& x, const SolveOptions& opts = {}) {
  auto cert = is_centrally_seminormal(x, opts);
  cert.note = kWcScNote;
  return cert;
}

}  // namespace realnorm
