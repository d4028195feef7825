#pragma once

#include "sixv/ybe.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sixv {

// Element of the composition groupoid: either a matrix in S_nff (S^x with
// Delta != (0,0)) tagged with its Delta pair, or a formal identity at an
// arbitrary Delta pair. Formal identities exist so that x * x^-1 is total;
// the identity 4x4 matrix itself is not an element.
class GroupoidElement {
public:
    static GroupoidElement from_matrix(SixVertexMatrix m, double eps = kDefaultEps);
    static GroupoidElement unit(DeltaPair d);

    bool is_identity() const { return !m_.has_value(); }
    const SixVertexMatrix& matrix() const;
    const DeltaPair& delta() const { return d_; }
    Mode mode() const { return d_.d1.mode(); }

private:
    GroupoidElement(std::optional<SixVertexMatrix> m, DeltaPair d)
        : m_(std::move(m)), d_(std::move(d)) {}

    std::optional<SixVertexMatrix> m_;
    DeltaPair d_;
};

GroupoidElement g_inverse(const GroupoidElement& x, double eps = kDefaultEps);

enum class ComposeStatus {
    defined,
    incompatible, // Delta(x) != Delta(y^-1); composition left undefined
    degenerate,   // Delta-compatible but the product leaves S_nff and is not an identity
};

struct GComposeResult {
    ComposeStatus status;
    std::optional<GroupoidElement> element;
    std::string detail;

    bool defined() const { return status == ComposeStatus::defined; }
};

// Partial composition. Matrix * Matrix is defined when Delta(x) equals
// Delta of the inverse of y's matrix; the product w = solve_w(x, y) then
// yields a matrix element, or the identity at Delta(y) when w is
// proportional to the identity pattern. Products that leave S_nff without
// being identities are reported as degenerate, never absorbed.
GComposeResult g_compose(const GroupoidElement& x, const GroupoidElement& y,
                         double eps = kDefaultEps);

// Identities compare by Delta pair, matrix elements projectively.
bool g_eq(const GroupoidElement& x, const GroupoidElement& y, double eps = kDefaultEps);

using Chain = std::vector<GroupoidElement>;

struct FuzzFailure {
    std::uint64_t seed = 0; // trial index under the run's master seed
    Chain chain;
    std::string check;
};

struct FuzzReport {
    std::uint64_t trials = 0;
    std::uint64_t passes = 0;
    std::vector<FuzzFailure> failures;
};

enum class SampleStrategy {
    family_exact, // exact chains inside one commutative constant-field family
    cross_float,  // floating chains crossing vertex groups
};

// Produces `count` composable chains of length `chain_len` (2 or 3),
// deterministic per (seed, chain index). family_exact draws rational family
// parameters and group elements, rejecting draws whose sub-products
// degenerate; it occasionally places a formal identity inside a length-3
// chain. cross_float draws a floating non-free-fermionic matrix, picks
// target a/c entries for the product, solves the consistency conditions for
// the b-entries of the product (a quadratic in b1*b2), and recovers the
// partner matrix, extending chains one link at a time.
std::vector<Chain> sample_composable(SampleStrategy strategy, std::uint64_t seed, int count,
                                     int chain_len = 2, double eps = kDefaultEps);

// Runs the invertible-magmoid identities plus the identity/inverse laws on
// each sample pair; failures carry the sample index and the failing check.
FuzzReport axiom_suite(const std::vector<Chain>& samples, double eps = kDefaultEps);

// For each sampled chain (u,v,w) with u*v and v*w defined, checks that
// (u*v)*w and u*(v*w) are both defined and equal. Any counterexample is
// recorded verbatim; a genuine one would falsify the conjectured extension
// and must be surfaced.
FuzzReport associativity_fuzz(SampleStrategy strategy, std::uint64_t seed, int trials,
                              double eps = kDefaultEps);

} // namespace sixv
