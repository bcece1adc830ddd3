#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace jacklab {

/// Weakly decreasing integer tuple of fixed length N >= 1.
/// Trailing zeros are significant: signatures of different lengths never
/// compare equal.
class Signature {
public:
    explicit Signature(std::vector<long> parts);

    std::size_t length() const { return parts_.size(); }
    long operator[](std::size_t i) const { return parts_[i]; }
    const std::vector<long>& parts() const { return parts_; }

    long sum() const;
    Signature shifted(long m) const;

    bool operator==(const Signature& o) const { return parts_ == o.parts_; }
    bool operator!=(const Signature& o) const { return parts_ != o.parts_; }
    bool operator<(const Signature& o) const { return parts_ < o.parts_; }

    std::string to_string() const;
    static Signature parse(const std::string& text);

private:
    std::vector<long> parts_;
};

/// Weakly decreasing nonnegative parts, trailing zeros ignored.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long> parts);

    /// Number of strictly positive parts.
    std::size_t length() const { return parts_.size(); }
    long part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    const std::vector<long>& parts() const { return parts_; }
    long size() const;
    /// Length of the main diagonal of the Young diagram.
    std::size_t diagonal_length() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<long> parts_;  // strictly positive, weakly decreasing
};

/// Modified Frobenius coordinates, stored doubled so half-integers stay exact:
/// doubled_a[i] = 2*(lambda_i - i + 1/2), doubled_b[i] likewise for the
/// conjugate. Both strictly decreasing, positive, of length d(lambda).
struct FrobeniusCoords {
    std::vector<long> doubled_a;
    std::vector<long> doubled_b;

    double a(std::size_t i) const { return 0.5 * static_cast<double>(doubled_a[i]); }
    double b(std::size_t i) const { return 0.5 * static_cast<double>(doubled_b[i]); }
    std::size_t depth() const { return doubled_a.size(); }
};

struct DiagramStats {
    long arm;
    long arm_colength;
    long leg;
    long leg_colength;
};

Partition conjugate(const Partition& p);

/// Arm/leg statistics of cell (i, j), 1-based; throws std::domain_error for
/// cells outside the diagram.
DiagramStats diagram_stats(const Partition& p, long i, long j);

FrobeniusCoords frobenius(const Partition& p);

/// Sign-split of a signature into the positive part lambda+ and the negated
/// negative part lambda-.
std::pair<Partition, Partition> split_signature(const Signature& s);

/// Reassemble a signature of length n from its sign-split halves.
Signature join_split(const Partition& plus, const Partition& minus, std::size_t n);

/// mu of length N, lambda of length N+1: lambda_{i+1} <= mu_i <= lambda_i.
bool interlaces(const Signature& mu, const Signature& lambda);

}  // namespace jacklab
