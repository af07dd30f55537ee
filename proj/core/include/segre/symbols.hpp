#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace segre {

// Kuenneth slot of a theta generator: T0 pairs against the unit class of the
// surface, T1 against the hyperplane class.
enum class ThetaKind : std::uint8_t { T0 = 0, T1 = 1 };

struct ThetaSym {
    ThetaKind kind = ThetaKind::T0;
    int index = 0;

    // Codimension: theta^0_a sits in degree a, theta^1_a in degree a-1.
    int degree() const { return kind == ThetaKind::T1 ? index - 1 : index; }

    friend auto operator<=>(const ThetaSym&, const ThetaSym&) = default;
};

inline ThetaSym theta0(int index) { return {ThetaKind::T0, index}; }
inline ThetaSym theta1(int index) { return {ThetaKind::T1, index}; }

// One basis word: a multiset of theta generators (kept sorted by
// (kind, index)) times exactly one S-class. S_0 is the unit, so the empty
// monomial is {thetas: [], s_index: 0}.
class Monomial {
  public:
    Monomial() = default;
    Monomial(std::vector<ThetaSym> thetas, int s_index);

    static Monomial s_class(int m) { return Monomial({}, m); }

    const std::vector<ThetaSym>& thetas() const { return thetas_; }
    int s_index() const { return s_index_; }
    int theta_count() const { return static_cast<int>(thetas_.size()); }

    int degree() const;

    // (w, i): total theta count and theta^0 count.
    struct Signature {
        int width = 0;
        int theta0_count = 0;
        friend bool operator==(const Signature&, const Signature&) = default;
    };
    Signature signature() const;

    Monomial with_s_index(int m) const { return Monomial(thetas_, m); }

    // e.g. "t0_3*t1_2*S_4"; the bare unit renders as "S_0".
    std::string render() const;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

  private:
    std::vector<ThetaSym> thetas_;  // sorted
    int s_index_ = 0;
};

// Maximal runs of equal symbols in a monomial's sorted theta word.
struct SymbolRun {
    ThetaSym sym;
    int count = 0;
    std::size_t first = 0;  // position of the run in thetas()
};
std::vector<SymbolRun> symbol_runs(const Monomial& m);

}  // namespace segre
