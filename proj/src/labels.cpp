#include "sixj/labels.hpp"

#include "sixj/error.hpp"

namespace sixj {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Inadmissible: return "Inadmissible";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::FaceViolation: return "FaceViolation";
    case ErrorKind::NotEuclidean: return "NotEuclidean";
    case ErrorKind::FlatUnsupported: return "FlatUnsupported";
    case ErrorKind::StepLeavesEuclideanRegion: return "StepLeavesEuclideanRegion";
    case ErrorKind::HalfIntegerResult: return "HalfIntegerResult";
    case ErrorKind::DegenerateAngle: return "DegenerateAngle";
  }
  return "Unknown";
}

bool is_admissible_triple(std::int64_t a, std::int64_t b, std::int64_t c) noexcept {
  if (a < 0 || b < 0 || c < 0) return false;
  return a <= b + c && b <= c + a && c <= a + b && (a + b + c) % 2 == 0;
}

bool is_admissible_sextuple(const LabelSextuple& labels) noexcept {
  for (const auto& f : kFaces)
    if (!is_admissible_triple(labels[f[0]], labels[f[1]], labels[f[2]])) return false;
  return true;
}

LabelSextuple scale_labels(const LabelSextuple& labels, std::int64_t k) {
  LabelSextuple out;
  for (int i = 0; i < 6; ++i) out[i] = labels[i] * k;
  return out;
}

std::string to_string(const LabelSextuple& labels) {
  std::string s;
  for (int i = 0; i < 6; ++i) {
    if (i) s += ',';
    s += std::to_string(labels[i]);
  }
  return s;
}

}  // namespace sixj
