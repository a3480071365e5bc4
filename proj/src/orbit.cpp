#include <nilorb/orbit.hpp>

#include <sstream>

namespace nilorb {

GMatrix nilpotent_exp(const GMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("nilpotent_exp: square matrix required");
    GMatrix result = GMatrix::identity(m.rows);
    GMatrix term = GMatrix::identity(m.rows);
    Rational fact(1);
    for (int k = 1; k <= m.rows; ++k) {
        term = term.mul(m);
        if (term.is_zero()) break;
        fact *= k;
        result = result.add(term.scale(GScalar(Rational(1) / fact)));
    }
    return result;
}

int nilpotency_depth(const GMatrix& n) {
    if (n.rows != n.cols) throw std::invalid_argument("nilpotency_depth: square matrix required");
    GMatrix p = GMatrix::identity(n.rows);
    for (int k = 0; k <= n.rows; ++k) {
        if (p.is_zero()) return k - 1;
        p = p.mul(n);
    }
    if (!p.is_zero()) throw std::invalid_argument("nilpotency_depth: matrix is not nilpotent");
    return n.rows;
}

ValidationReport validate_orbit(const NilpotentOrbit& orbit) {
    ValidationReport report;

    // nilpotency
    {
        ValidationCheck c{"nilpotency", false, ""};
        if (orbit.N.rows != orbit.rank || orbit.N.cols != orbit.rank) {
            c.detail = "N has wrong shape";
        } else if (orbit.N.pow(orbit.rank).is_zero()) {
            c.passed = true;
        } else {
            c.detail = "N^rank != 0";
        }
        report.checks.push_back(c);
    }

    // weight sign
    {
        ValidationCheck c{"weight_sign", orbit.weight < 0, ""};
        if (!c.passed) c.detail = "weight must be negative";
        report.checks.push_back(c);
    }

    // transversality: N F^p inside F^{p-1} for every stored level
    {
        ValidationCheck c{"transversality", true, ""};
        if (orbit.F.empty() || orbit.F.ambient_dim != orbit.rank) {
            c.passed = false;
            c.detail = "F missing or wrong ambient dimension";
        } else {
            for (const auto& [p, s] : orbit.F.levels) {
                Subspace img = image_of(orbit.N, s);
                if (!orbit.F.at(p - 1).contains(img)) {
                    c.passed = false;
                    std::ostringstream os;
                    os << "N F^" << p << " not inside F^" << (p - 1);
                    c.detail = os.str();
                    break;
                }
            }
        }
        report.checks.push_back(c);
    }

    // integrality of exp(N); N integer nilpotent does not guarantee this
    // because of the 1/k! factors, so it is a genuine constraint on the
    // monodromy being defined over the lattice.
    {
        ValidationCheck c{"exp_integrality", true, ""};
        if (orbit.N.rows == orbit.rank && orbit.N.cols == orbit.rank &&
            orbit.N.pow(orbit.rank).is_zero()) {
            bool n_integer = true;
            for (const auto& x : orbit.N.a) {
                if (!x.is_real() || x.re.get_den() != 1) n_integer = false;
            }
            if (!n_integer) {
                c.passed = false;
                c.detail = "N has non-integer entries";
            } else {
                GMatrix e = nilpotent_exp(orbit.N);
                for (const auto& x : e.a) {
                    if (!x.is_real() || x.re.get_den() != 1) {
                        c.passed = false;
                        c.detail = "exp(N) has non-integer entries";
                        break;
                    }
                }
            }
        } else {
            c.passed = false;
            c.detail = "N not nilpotent, exp check skipped";
        }
        report.checks.push_back(c);
    }

    return report;
}

}  // namespace nilorb
