#pragma once

// Elementary sequences psi_1..psi_g (each step repeats or increments the
// previous value), their run-length notation, and the two-way bridge with
// self-dual canonical types.

#include <string>
#include <string_view>
#include <vector>

#include "bt1/canonical.hpp"

namespace bt1 {

struct ElementarySequence {
  std::vector<long long> psi;  // psi[j-1] holds psi_j; psi_0 = 0 implicitly

  long long g() const { return static_cast<long long>(psi.size()); }
  void validate() const;  // steps of 0 or 1 starting from 0

  bool operator==(const ElementarySequence&) const = default;
};

struct Run {
  bool up = false;  // up: increments; otherwise constant
  long long len = 0;

  bool operator==(const Run&) const = default;
};

struct RunLengthEO {
  std::vector<Run> runs;  // normalized: positive lengths, directions alternate

  static RunLengthEO from_psi(const ElementarySequence& es);
  ElementarySequence expand() const;

  // ASCII form: comma-separated u<len> / c<len>, e.g. "u2,c1"; parsing
  // accepts zero-length and repeated-direction runs and normalizes them.
  static RunLengthEO parse(std::string_view s);
  std::string str() const;
  std::string pretty() const;  // arrow notation with superscript lengths

  long long total() const;  // sum of lengths (the sequence length g)

  void normalize();

  bool operator==(const RunLengthEO&) const = default;
};

// The sequence of a self-dual type: psi rises through block i exactly when
// the F-side index advances there.  NotSelfDual otherwise.
ElementarySequence es_from_canonical(const CanonicalType& ct);

// Inverse construction: extend psi to the dimension-map pair on 0..2g and
// close {0, 2g} under both maps; the resulting dimensions are the rho steps.
CanonicalType canonical_from_es(const ElementarySequence& es);

}  // namespace bt1
