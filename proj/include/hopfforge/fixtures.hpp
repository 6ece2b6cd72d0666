#pragma once

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "hopfforge/builders.hpp"
#include "hopfforge/group.hpp"
#include "hopfforge/projection.hpp"
#include "hopfforge/simplicial.hpp"

namespace hopfforge {

enum class Kind { Hopf, Group, CrossedModule, Projection, YDModule, Simplicial };

inline const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Hopf: return "hopf";
    case Kind::Group: return "group";
    case Kind::CrossedModule: return "crossed_module";
    case Kind::Projection: return "projection";
    case Kind::YDModule: return "yd_module";
    case Kind::Simplicial: return "simplicial";
  }
  return "?";
}

// A parsed definition: exactly the member matching kind is set, except that
// crossed modules also carry their linearized nerve once it is built.
struct Document {
  Kind kind = Kind::Hopf;
  std::optional<HopfAlgebra> hopf;
  std::optional<GroupTable> group;
  std::optional<GroupCrossedModule> xmod;
  std::optional<HopfProjection> projection;
  std::optional<Object> yd;
  std::optional<TruncatedSimplicialHopf> simplicial;
};

inline std::size_t max_dim_from_env() {
  if (const char* v = std::getenv("HOPFFORGE_MAX_DIM")) {
    try {
      const long long n = std::stoll(v);
      if (n > 0) return static_cast<std::size_t>(n);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("HOPFFORGE_MAX_DIM is not a positive integer: ") + v);
  }
  return 512;
}

// Highest nerve level whose group order stays within max_dim (at most 3).
inline std::size_t nerve_top(const GroupCrossedModule& x, std::size_t max_dim) {
  std::size_t top = 0, order = x.n.order();
  while (top < max_simplicial_level && order * x.m.order() <= max_dim) {
    order *= x.m.order();
    ++top;
  }
  return top;
}

inline HopfProjection sweedler_projection() {
  const HopfAlgebra h4 = sweedler_algebra();
  const HopfAlgebra c2 = group_algebra(cyclic_group(2), "kC2");
  // g -> g, x -> 0; i(g) = g.
  return HopfProjection(h4, c2, LinMap::from_rows(h4.space(), c2.space(), {{1, 0, 0, 0}, {0, 1, 0, 0}}),
                        linearize_hom(c2, h4, {0, 1}));
}

inline HopfProjection sign_projection_s3() {
  const GroupTable s3 = symmetric_group_3();
  const HopfAlgebra ks3 = group_algebra(s3, "kS3");
  const HopfAlgebra c2 = group_algebra(cyclic_group(2), "kC2");
  std::vector<std::size_t> sign(s3.order());
  for (std::size_t a = 0; a < sign.size(); ++a) sign[a] = s3_sign(a) == 1 ? 0 : 1;
  // C2 -> S3 sends g to the transposition (12).
  return HopfProjection(ks3, c2, linearize_hom(ks3, c2, sign), linearize_hom(c2, ks3, {0, 1}));
}

inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "trivial",      "c2",          "c3",       "s3",
      "sweedler",     "proj-sweedler", "proj-sign-s3", "nerve-c2-id",
      "nerve-c2-trivial", "nerve-s3-id"};
  return names;
}

inline bool builtin_is_large(const std::string& name) { return name == "nerve-s3-id"; }

inline GroupCrossedModule builtin_crossed_module(const std::string& name) {
  const GroupTable c2 = cyclic_group(2);
  if (name == "nerve-c2-id") return identity_crossed_module(c2);
  if (name == "nerve-c2-trivial") return trivial_crossed_module(c2, c2);
  if (name == "nerve-s3-id") return identity_crossed_module(symmetric_group_3());
  throw UsageError("unknown crossed module fixture '" + name + "'");
}

inline Document builtin(const std::string& name, bool allow_large = false,
                        std::size_t max_dim = max_dim_from_env()) {
  Document d;
  auto hopf = [&d](HopfAlgebra h) {
    d.kind = Kind::Hopf;
    d.hopf = std::move(h);
  };
  if (name == "trivial") hopf(HopfAlgebra::base_field());
  else if (name == "c2") hopf(group_algebra(cyclic_group(2), "kC2"));
  else if (name == "c3") hopf(group_algebra(cyclic_group(3), "kC3"));
  else if (name == "s3") hopf(group_algebra(symmetric_group_3(), "kS3"));
  else if (name == "sweedler") hopf(sweedler_algebra());
  else if (name == "proj-sweedler" || name == "proj-sign-s3") {
    d.kind = Kind::Projection;
    d.projection = name == "proj-sweedler" ? sweedler_projection() : sign_projection_s3();
  } else if (name.rfind("nerve-", 0) == 0) {
    if (builtin_is_large(name) && !allow_large)
      throw UsageError("fixture '" + name + "' reaches dimension 216; pass --allow-large");
    d.kind = Kind::CrossedModule;
    d.xmod = builtin_crossed_module(name);
    d.simplicial = linearize(nerve_of_crossed_module(*d.xmod, nerve_top(*d.xmod, max_dim)));
  } else {
    std::string list;
    for (const auto& n : builtin_names()) list += (list.empty() ? "" : ", ") + n;
    throw UsageError("unknown builtin '" + name + "' (known: " + list + ")");
  }
  return d;
}

}  // namespace hopfforge
