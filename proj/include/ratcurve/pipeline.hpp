#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ratcurve/curve.hpp"
#include "ratcurve/ideal.hpp"
#include "ratcurve/partition.hpp"
#include "ratcurve/roots.hpp"
#include "ratcurve/secant.hpp"

namespace ratcurve {

// k -> partition -> count
using StratumTable = std::map<int, std::map<Partition, int>>;

struct CountResult {
  int top = 0;            // largest k with X_k nonempty
  StratumTable strata;    // N_{k,lambda}: points of Z_k in R_lambda and in no smaller stratum
  StratumTable branches;  // N'_{k,sigma}: singular points of multiplicity k with branch shape sigma
  std::map<int, int> N_k;
  int N = 0;
};

struct CuspidalResult {
  bool cuspidal = false;
  bool ordinary_only = false;
  int cusp_count = 0;
  int support_size = 0;  // |Supp(X_2)|
};

struct IdealsResult {
  std::map<int, Ideal> J_geq;  // J_{>=k} in K[w0,w1,w2]
  std::map<int, Ideal> J;      // J_k = J_{>=k} : J_{>=k+1}
  Ideal J_N;
  std::map<int, int> N_k;
  int N = 0;
};

struct PreimageResult {
  std::map<int, BinaryForm> F;      // F_k, primitive
  std::map<int, BinaryForm> fresh;  // F_k with the roots of F_{k+1} removed
  std::vector<std::string> divisibility_failures;
};

enum class RealClass { RealOnCurve, Acnode, Hidden, NonReal };
std::string to_string(RealClass c);

struct SingularPoint {
  int multiplicity = 0;
  Partition branch_partition;
  PointPk coords;
  std::vector<DivisorEntry> preimages;
  std::optional<int> delta;
  bool delta_heuristic = false;
  std::optional<int> a_index;     // s of A_s
  bool a_inconclusive = false;    // verification path stopped
  std::string a_verification;     // "verified", "inconclusive: ...", "not applicable"
  std::optional<RealClass> real_class;
  std::optional<bool> oracle_pass;
};

struct X2Point {
  PointPk point;  // R in Supp(X_2)
  int length = 0;
  bool on_conic = false;
  PointPk image;  // pi of the secant line of R
};

struct Algorithm4Result {
  bool ran = false;
  std::string skipped_reason;
  BinaryForm F;  // preimage form of the non-reduced X_2
  bool degree_ok = false;
  Ideal S;       // the projected preimage scheme S'
  int tested = 0, passed = 0;
};

struct PipelineOptions {
  int precision_bits = kDefaultPrecisionBits;
  double cluster_tol = 1e-8;
};

// Shared state of one analysis; every stage is computed on first use.
class Pipeline {
 public:
  explicit Pipeline(CurveParam c, PipelineOptions opt = {});
  const CurveParam& curve() const { return c_; }
  const PipelineOptions& options() const { return opt_; }
  int n() const { return c_.n(); }

  const Ideal& X(int k);  // I_{X_k}
  const Ideal& Z(int k);  // radical of I_{X_k}
  int top();

  const CountResult& counts();            // Algorithms 1 and 1.1
  const CuspidalResult& cuspidal();
  const IdealsResult& ideals();           // Algorithm 2
  const PreimageResult& preimages();      // Algorithm 3
  const std::vector<SingularPoint>& points();  // Algorithm 3 grouped images
  const std::vector<X2Point>& x2_points();
  const Algorithm4Result& algorithm4();
  // Applies classification and delta to points(); returns the classified list.
  const std::vector<SingularPoint>& classified();

 private:
  CurveParam c_;
  PipelineOptions opt_;
  std::map<int, Ideal> X_, Z_;
  std::optional<int> top_;
  std::optional<CountResult> counts_;
  std::optional<CuspidalResult> cusp_;
  std::optional<IdealsResult> ideals_;
  std::optional<PreimageResult> pre_;
  std::optional<std::vector<SingularPoint>> points_;
  std::optional<std::vector<X2Point>> x2_;
  std::optional<Algorithm4Result> alg4_;
  std::optional<std::vector<SingularPoint>> classified_;
};

// Free-function entry points (each builds its own Pipeline).
CountResult count_singularities(const CurveParam& c);
StratumTable branch_structure(const CurveParam& c);
CuspidalResult cuspidal_test(const CurveParam& c);
IdealsResult singular_ideals(const CurveParam& c);
PreimageResult preimage_forms(const CurveParam& c);
std::vector<SingularPoint> classify_double_points(const CurveParam& c);
// delta per singular point; throws GlobalDeltaMismatch unless the sum is C(n-1,2).
std::vector<std::pair<PointPk, int>> delta_map(const CurveParam& c);

// sum_k N_k C(k,2) == C(n-1,2)
bool clebsch_check(const std::map<int, int>& N_k, int n);

// Minimal polynomial of s on A[s]/(G(s,1)) for the sheared chart of `fib`,
// returned as a binary form in the original parameter.
BinaryForm preimage_form(const SecantFibers& fib);

// Projective degree of I : g^m for m = 0..steps-1 (I zero-dimensional).
std::vector<int> colon_chain_degrees(const Ideal& I, const MultiPoly& g, int steps);

// The conic of squares x1^2 - 4 x0 x2 in K[x0,x1,x2].
MultiPoly conic_poly(const RingPtr& r);

}  // namespace ratcurve
