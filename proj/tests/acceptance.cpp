// Runs the twelve acceptance criteria and prints one line per criterion.
// Equalities are exact; each criterion also has a wall-clock limit.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "hopfforge/cli.hpp"

using namespace hopfforge;

namespace {

class Tally {
 public:
  void need(bool ok, const std::string& what) {
    ++total_;
    if (!ok) failed_.push_back(what);
  }
  void report(const Report& r, const std::string& what) {
    for (const auto& c : r.checks())
      if (c.status == Status::Fail) {
        need(false, what + ": " + c.name);
        return;
      }
    need(true, what);
  }
  bool ok() const { return failed_.empty(); }
  std::string summary() const {
    if (failed_.empty()) return std::to_string(total_) + " conditions";
    std::string s = std::to_string(failed_.size()) + "/" + std::to_string(total_) + " failed: ";
    for (std::size_t k = 0; k < failed_.size() && k < 3; ++k) s += (k ? "; " : "") + failed_[k];
    return s;
  }

 private:
  std::size_t total_ = 0;
  std::vector<std::string> failed_;
};

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<void(Tally&)> body;
};

SparseVec e(std::size_t i, long c = 1) { return SparseVec{{i, Rational(c)}}; }

const Check* find(const Report& r, const std::string& name) { return r.find(name); }

TruncatedSimplicialHopf nerve(const GroupCrossedModule& x, std::size_t top) {
  return linearize(nerve_of_crossed_module(x, top));
}

GroupCrossedModule c2_id() { return identity_crossed_module(cyclic_group(2)); }
GroupCrossedModule c2_trivial() { return trivial_crossed_module(cyclic_group(2), cyclic_group(2)); }
GroupCrossedModule s3_id() { return identity_crossed_module(symmetric_group_3()); }

// |{a in G_2 : d_0 a = 1, d_2 a = 1}| and friends by direct enumeration of
// (m_2, m_1, n) tuples.
std::array<std::size_t, 3> kernel_orders(const GroupCrossedModule& x) {
  const std::size_t p = x.m.order(), q = x.n.order();
  const std::size_t one1 = x.m.identity() * q + x.n.identity();
  std::array<std::size_t, 3> c{0, 0, 0};
  for (std::size_t a = 0; a < p * q; ++a) c[0] += a % q == x.n.identity();
  for (std::size_t a = 0; a < p * p * q; ++a) {
    const std::size_t m2 = a / (p * q), m1 = (a / q) % p, n = a % q;
    const bool d0 = a % (p * q) == one1;
    const bool d2 = m2 * q + x.n.mul(x.boundary[m1], n) == one1;
    c[1] += d0;
    c[2] += d0 && d2;
  }
  return c;
}

struct Spawned {
  int code;
  std::string out;
};

Spawned spawn(const std::string& args) {
  const std::string cmd = std::string(HOPFFORGE_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<Criterion> criteria() {
  std::vector<Criterion> c;

  c.push_back({1, "axiom suites", 1.0, [](Tally& t) {
    for (const char* n : {"trivial", "c2", "c3", "s3", "sweedler"})
      t.report(check_hopf(*builtin(n).hopf), std::string("check_hopf ") + n);
    const Document bad = parse_definition(std::string(HOPFFORGE_SAMPLES) + "/corrupted_c2.json",
                                          ParseOptions{false, 512});
    const Report br = check_hopf(*bad.hopf);
    const Check* a = find(br, "associativity");
    t.need(a && a->status == Status::Fail && a->witness, "corrupted C2 fails associativity with witness");
  }});

  c.push_back({2, "Radford on Sweedler", 1.0, [](Tally& t) {
    const HopfProjection p = sweedler_projection();
    const Subspace k = rker(p.big(), p.small(), p.proj());
    t.need(k.dim() == 2 && k == Subspace(p.big().space(), {e(0), e(2)}), "rker = span{1, x}");
    const RKerResult b = induced_braided_hopf(p);
    // x has coordinate 1; x (x) 1 + 1 (x) x in B (x) B.
    t.need(b.braided.comul().column(1) == SparseVec{{1, Rational(1)}, {2, Rational(1)}},
           "braided coproduct of x is primitive");
    t.report(check_hopf(bosonisation(b.braided)), "bosonisation passes check_hopf");
    const RadfordIso iso = radford_iso(p);
    t.need(iso.boson.dim() == 4, "bosonisation has dim 4");
    t.need(compose(iso.psi, iso.phi) == LinMap::identity(iso.boson.space()), "psi phi = id_4");
    t.need(compose(iso.phi, iso.psi) == LinMap::identity(p.big().space()), "phi psi = id_4");
    t.report(iso.report, "radford_iso report");
  }});

  c.push_back({3, "Radford on groups", 2.0, [](Tally& t) {
    const HopfProjection p = sign_projection_s3();
    std::size_t even = 0;
    for (std::size_t a = 0; a < 6; ++a) even += s3_sign(a) == 1;
    t.need(rker(p.big(), p.small(), p.proj()).dim() == 3 && even == 3, "dim RKer = 3 = |A3|");
    const RadfordIso iso = radford_iso(p);
    t.need(iso.boson.dim() == 6, "bosonisation has dim 6");
    t.need(compose(iso.psi, iso.phi) == LinMap::identity(iso.boson.space()), "psi phi = id_6");
    t.need(compose(iso.phi, iso.psi) == LinMap::identity(p.big().space()), "phi psi = id_6");
    t.report(iso.report, "radford_iso report");
  }});

  c.push_back({4, "YD suite", 5.0, [](Tally& t) {
    for (const char* n : {"trivial", "c2", "c3", "s3", "sweedler"})
      t.report(check_yd(regular_yd(*builtin(n).hopf)), std::string("regular YD ") + n);
    const HopfProjection sw = sweedler_projection(), sg = sign_projection_s3();
    for (const HopfProjection* p : {&sw, &sg}) t.report(check_yd(projection_yd(*p)), "projection_yd");
    const YDModule line = induced_braided_hopf(sw).braided.object();
    const YDModule a3 = induced_braided_hopf(sg).braided.object();
    const std::vector<std::vector<YDModule>> groups = {
        {regular_yd(*builtin("c3").hopf)},
        {regular_yd(*builtin("s3").hopf)},
        {regular_yd(sw.big()), yd_pushforward(sw, line)},
        {regular_yd(sw.small()), projection_yd(sw), line, projection_yd(sg), a3}};
    std::size_t pairs = 0, triples = 0;
    for (const auto& g : groups) {
      for (const auto& x : g)
        for (const auto& y : g) {
          ++pairs;
          t.need(is_invertible(yd_braiding(x, y)), "braiding invertible");
        }
      for (const auto& x : g)
        for (const auto& y : g)
          for (const auto& z : g) {
            ++triples;
            t.report(check_hexagons(x, y, z), "hexagons");
          }
    }
    const LinMap r = yd_braiding(line, line);
    t.need(r.column(3) == e(3, -1), "R'(x (x) x) = -x (x) x");
    t.need(pairs == 31 && triples == 135, "fixture pairs and triples enumerated");
  }});

  c.push_back({5, "interchange functor", 1.0, [](Tally& t) {
    for (const HopfProjection& p : {sweedler_projection(), sign_projection_s3()}) {
      const YDModule b = induced_braided_hopf(p).braided.object();
      const YDModule f = yd_pushforward(p, b);
      t.report(check_yd(f), "pushforward passes check_yd");
      t.need(yd_braiding(f, f).same_entries(yd_braiding(b, b)), "braiding preserved entrywise");
    }
  }});

  c.push_back({6, "kernel-generator identities", 1.0, [](Tally& t) {
    for (const HopfProjection& p : {sweedler_projection(), sign_projection_s3()}) {
      const Report r = kernel_generators(p).report;
      for (const char* n : {"f idempotent", "g f = g", "f restricted to kernel is id",
                            "f g convolution", "f (i proj) convolution"})
        t.need(r.passed(n), n);
    }
  }});

  c.push_back({7, "simplicial suite", 2.0, [](Tally& t) {
    t.report(verify_simplicial(nerve(c2_id(), 3)), "nerve C2 id");
    t.report(verify_simplicial(nerve(c2_trivial(), 3)), "nerve C2 trivial");
    t.report(verify_simplicial(TruncatedSimplicialHopf::constant(sweedler_algebra())), "constant H4");
    const TruncatedSimplicialHopf n = nerve(c2_id(), 2);
    const Report mr = verify_simplicial(n.with_face(2, 0, n.d(2, 1)));
    const Check* one = find(mr, "(1) d0 d2 = d1 d0 on H2");
    t.need(one && one->status == Status::Fail && one->witness, "mutation fails identity (1)");
  }});

  c.push_back({8, "dim-2 pipeline", 10.0, [](Tally& t) {
    const TruncatedSimplicialHopf n = nerve(c2_id(), 2);
    const PipelineResult p = dim2_pipeline(n);
    const auto k = kernel_orders(c2_id());
    t.need(p.a100.subspace.dim() == 2 && k[0] == 2, "dim A^1_00 = 2");
    t.need(p.a200.subspace.dim() == 2 && k[1] == 2, "dim A^2_00 = 2");
    t.need(p.a221.subspace.dim() == 1 && k[2] == 1, "dim A^2_21 = 1");
    const Report fg = check_fg_commutation(n);
    for (const char* s : {"f d2 = d2 f", "f s1 = s1 f", "g d2 = d2 g", "g s1 = s1 g"}) t.need(fg.passed(s), s);
    bool maps = true;
    for (const auto& ch : p.report.checks())
      if (ch.name.rfind("d2: ", 0) == 0 || ch.name.rfind("s1: ", 0) == 0) maps = maps && ch.passed();
    t.need(maps, "restricted (d2, s1) braided morphism checks");
    t.report(p.report, "pipeline report");

    const TruncatedSimplicialHopf s = nerve(s3_id(), 2);
    const Report sr = check_fg_commutation(s);
    const Check* d1 = find(sr, "f d1 = d1 f");
    bool grouplike = false;
    if (d1 && d1->witness) {
      const Space& h2 = s.level(2).space();
      for (std::size_t a = 0; a < h2.dim(); ++a)
        if (h2.label(a) == d1->witness->col) grouplike = is_grouplike(s.level(2), e(a));
    }
    t.need(d1 && d1->detail == "does not hold" && grouplike, "d1 square fails on S3 at a group-like");
    t.report(dim2_pipeline(s, false).report, "S3 pipeline");
  }});

  c.push_back({9, "Peiffer pairing", 5.0, [](Tally& t) {
    for (const auto& x : {c2_id(), c2_trivial()}) {
      const TruncatedSimplicialHopf n = nerve(x, 2);
      const PipelineResult p = dim2_pipeline(n, false);
      const Report r = check_peiffer(n, p);
      for (const char* s : {"composite = closed form", "lands in A^2_21", "pairing is eps (x) eps"})
        t.need(r.passed(s), s);
    }
  }});

  c.push_back({10, "braided crossed module", 10.0, [](Tally& t) {
    for (const auto& x : {c2_id(), c2_trivial()}) {
      const TruncatedSimplicialHopf n = nerve(x, 2);
      const Report r = extract_xmod(n, dim2_pipeline(n, false)).report;
      for (const char* s : {"twisted law A^1_00 -> H0", "boundary equivariant", "Peiffer identity",
                            "braided adjoint = adjoint"})
        t.need(r.passed(s), s);
      t.report(r, "extract_xmod report");
    }
  }});

  c.push_back({11, "Moore oracle", 1.0, [](Tally& t) {
    for (const auto& x : {c2_id(), c2_trivial(), s3_id()}) {
      const Report r = moore_group_oracle(nerve_of_crossed_module(x, 2), x);
      for (const char* s : {"N2 trivial", "N2' trivial", "N1 matches M", "boundary matches",
                            "action matches"})
        t.need(r.passed(s), s);
    }
  }});

  c.push_back({12, "CLI examples", 10.0, [](Tally& t) {
    const Spawned a = spawn("check-hopf --builtin sweedler");
    t.need(a.code == 0 && a.out.find("FAIL") == std::string::npos &&
               a.out.find("pass  associativity") != std::string::npos,
           "check-hopf sweedler exits 0 with every axiom passing");
    const Spawned b1 = spawn("extract-xmod --builtin nerve-c2-id --json");
    const Spawned b2 = spawn("extract-xmod --builtin nerve-c2-id --json");
    bool laws = false, dims = false;
    try {
      const Json j = Json::parse(b1.out);
      dims = j["dims"] == Json{{"A100", 2}, {"A221", 1}};
      int ok = 0;
      for (const auto& ch : j["checks"])
        if ((ch["name"] == "twisted law A^1_00 -> H0" || ch["name"] == "boundary equivariant" ||
             ch["name"] == "Peiffer identity") &&
            ch["status"] == "pass")
          ++ok;
      laws = ok == 3;
    } catch (const std::exception&) {
    }
    t.need(b1.code == 0 && dims && laws, "extract-xmod exits 0 with dims {A100: 2, A221: 1}");
    t.need(b1.out == b2.out && !b1.out.empty(), "--json byte-identical across runs");
    const Spawned c = spawn("check-hopf --input " + std::string(HOPFFORGE_SAMPLES) +
                            "/corrupted_c2.json --json");
    bool witness = false;
    try {
      const Json cj = Json::parse(c.out);
      for (const auto& ch : cj["checks"])
        if (ch["name"] == "associativity") witness = ch["status"] == "fail" && ch.contains("witness");
    } catch (const std::exception&) {
    }
    t.need(c.code == 1 && witness, "corrupted input exits 1 with associativity witness");
  }});
  return c;
}

}  // namespace

int main() {
  int failures = 0;
  for (const Criterion& c : criteria()) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(t);
    } catch (const std::exception& e) {
      t.need(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_s;
    const bool ok = t.ok() && in_time;
    failures += !ok;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (ok ? "PASS" : "FAIL") << "  " << c.id << ". " << c.title << "  [" << secs << " s, limit "
         << c.limit_s << " s, tolerance 0 (exact)]  " << t.summary();
    if (!in_time) line << "; over time limit";
    std::cout << line.str() << std::endl;
  }
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << 12 - failures << "/12" << std::endl;
  return failures ? 1 : 0;
}
