#pragma once

#include "deforma/gbasis.hpp"
#include "deforma/polyring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace deforma {

struct PointNotOnVarietyError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// point with exact rational coordinates; irrational points are out of scope
struct PointSpec {
    std::vector<Rational> coordinates;

    static PointSpec origin(std::size_t n) {
        return PointSpec{std::vector<Rational>(n, Rational(0))};
    }
    bool is_origin() const {
        for (const auto& c : coordinates)
            if (c != 0) return false;
        return true;
    }
};

struct JacobianMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::vector<Polynomial>> entries;  // entries[i][j] = df_i/dx_j
};

struct T1Result {
    enum class Verdict { Smooth, IsolatedSingular, NonIsolated };
    Verdict verdict;
    std::size_t tau = 0;           // IsolatedSingular: dim T^1 >= 1
    std::size_t sing_locus_dim = 0;  // NonIsolated: local dimension >= 1
    // standard monomial basis of T^1 in increasing local order, when finite;
    // module case pairs each monomial with its free-module component
    std::optional<std::vector<std::pair<std::size_t, Monomial>>> basis;

    bool smooth() const { return verdict == Verdict::Smooth; }
};

JacobianMatrix jacobian(const std::vector<Polynomial>& fs);

// ideal of all size x size minors; zero ideal when size exceeds the
// column count
Ideal minors(const JacobianMatrix& J, std::size_t size);

// (f_1,...,f_r) + I_r(J_f)
Ideal singular_locus_ideal(const std::vector<Polynomial>& fs);

T1Result tjurina_hypersurface(const Polynomial& f, const PointSpec& p,
                              const ResourceLimits& limits = {});

QuotientDimension milnor_number(const Polynomial& f, const PointSpec& p,
                                const ResourceLimits& limits = {});

// complete-intersection T^1 via the cokernel presentation
// S^r / (J S^n + I S^r); the regular-sequence hypothesis is the
// caller's, only cheap failures are detected
T1Result t1_ci_dimension(const std::vector<Polynomial>& fs, const PointSpec& p,
                         const ResourceLimits& limits = {});

struct ClassifyReport {
    bool on_variety = true;
    std::size_t jacobian_rank_at_p = 0;
    T1Result t1;
    std::vector<Polynomial> sing_locus_generators;
};

ClassifyReport classify_point(const std::vector<Polynomial>& fs, const PointSpec& p,
                              const ResourceLimits& limits = {});

}  // namespace deforma
