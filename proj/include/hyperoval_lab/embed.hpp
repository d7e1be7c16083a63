#ifndef HYPEROVAL_LAB_EMBED_HPP
#define HYPEROVAL_LAB_EMBED_HPP

// Field homomorphisms GF(2^d) -> GF(2^e) for d | e.
//
// The map sends the source's canonical primitive element to
// target.primitive()^((2^e-1)/(2^d-1)). Because the primitive elements are
// chosen norm-compatibly (see FieldCtx), embeddings compose: going through any
// intermediate field gives the same result as the direct map.

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "upoly.hpp"

namespace hyperoval_lab {

class Embedding {
 public:
  Embedding(const FieldCtx& source, const FieldCtx& target) : src_(&source), dst_(&target) {
    const unsigned d = source.degree(), e = target.degree();
    if (e % d != 0)
      throw PreconditionError("embed: GF(2^" + std::to_string(d) + ") is not a subfield of GF(2^" +
                              std::to_string(e) + ")");
    images_.resize(d);
    if (d == 1) {
      images_[0] = 1;
    } else {
      const std::uint64_t n = target.unit_group_order() / source.unit_group_order();
      const Bits rho = target.pow(target.primitive(), n);
      // x = pi_d^L in the source, so x maps to rho^L.
      Bits x_image = d == e ? 2 : target.pow(rho, source.log(2));
      Bits v = 1;
      for (unsigned j = 0; j < d; ++j) {
        images_[j] = v;
        v = target.mul(v, x_image);
      }
    }
    build_inverse();
  }

  const FieldCtx& source() const { return *src_; }
  const FieldCtx& target() const { return *dst_; }

  Bits apply(Bits a) const {
    Bits r = 0;
    for (unsigned j = 0; a; ++j, a >>= 1)
      if (a & 1) r ^= images_[j];
    return r;
  }

  /// Preimage of a, or nullopt when a is outside the image subfield.
  std::optional<Bits> preimage(Bits a) const {
    Bits combo = 0;
    for (const auto& [pivot_bit, row] : rows_) {
      if ((a >> pivot_bit) & 1) {
        a ^= row.first;
        combo ^= row.second;
      }
    }
    if (a != 0) return std::nullopt;
    return combo;
  }

 private:
  void build_inverse() {
    // Row-reduce the basis images; each row remembers which source bits produced it.
    for (unsigned j = 0; j < images_.size(); ++j) {
      Bits v = images_[j], tag = Bits{1} << j;
      for (const auto& [pb, row] : rows_) {
        if ((v >> pb) & 1) {
          v ^= row.first;
          tag ^= row.second;
        }
      }
      if (v == 0) throw ConsistencyError("embedding is not injective");
      const unsigned pb = static_cast<unsigned>(gf2x::degree(v));
      for (auto& [opb, orow] : rows_) {
        if ((orow.first >> pb) & 1) {
          orow.first ^= v;
          orow.second ^= tag;
        }
      }
      rows_.emplace_back(pb, std::make_pair(v, tag));
    }
  }

  const FieldCtx* src_;
  const FieldCtx* dst_;
  std::vector<Bits> images_;
  std::vector<std::pair<unsigned, std::pair<Bits, Bits>>> rows_;
};

/// Cached embedding between two canonical contexts.
inline const Embedding& embedding(const FieldCtx& source, const FieldCtx& target) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<Embedding>> cache;
  const auto key = std::make_pair(source.degree(), target.degree());
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto built = std::make_unique<Embedding>(source, target);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(built));
  return *it->second;
}

inline FFElem embed(const FFElem& a, const FieldCtx& target) {
  return FFElem(target, embedding(a.ctx(), target).apply(a.bits()));
}

/// Restricts a to the subfield `sub` of its field; throws if a lies outside it.
inline FFElem restrict_to(const FFElem& a, const FieldCtx& sub) {
  auto pre = embedding(sub, a.ctx()).preimage(a.bits());
  if (!pre) throw PreconditionError("restrict_to: element not in the requested subfield");
  return FFElem(sub, *pre);
}

inline UPoly embed(const UPoly& p, const FieldCtx& target) {
  const Embedding& m = embedding(p.ctx(), target);
  std::vector<Bits> c(p.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = m.apply(p.coeffs()[i]);
  return UPoly(target, std::move(c));
}

}  // namespace hyperoval_lab

#endif  // HYPEROVAL_LAB_EMBED_HPP
