#include "jacklab/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace jacklab {

Signature::Signature(std::vector<long> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("signature must have length >= 1");
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
        if (parts_[i] < parts_[i + 1])
            throw std::invalid_argument("signature parts must be weakly decreasing");
}

long Signature::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

Signature Signature::shifted(long m) const {
    std::vector<long> p(parts_);
    for (auto& v : p) v += m;
    return Signature(std::move(p));
}

std::string Signature::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ']';
    return os.str();
}

Signature Signature::parse(const std::string& text) {
    std::string t = text;
    auto strip = [](std::string& s) {
        while (!s.empty() && (s.front() == ' ')) s.erase(s.begin());
        while (!s.empty() && (s.back() == ' ')) s.pop_back();
    };
    strip(t);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw std::invalid_argument("signature text must look like [3,1,0,-2]");
    t = t.substr(1, t.size() - 2);
    std::vector<long> parts;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        strip(item);
        if (item.empty()) throw std::invalid_argument("empty entry in signature text");
        std::size_t pos = 0;
        long v = std::stol(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad integer in signature text: " + item);
        parts.push_back(v);
    }
    return Signature(std::move(parts));
}

Partition::Partition(std::vector<long> parts) {
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] < parts[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    for (long v : parts) {
        if (v < 0) throw std::invalid_argument("partition parts must be nonnegative");
        if (v > 0) parts_.push_back(v);
    }
}

long Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

std::size_t Partition::diagonal_length() const {
    std::size_t d = 0;
    while (d < parts_.size() && parts_[d] > static_cast<long>(d)) ++d;
    return d;
}

Partition conjugate(const Partition& p) {
    std::vector<long> out;
    if (p.length() == 0) return Partition{};
    out.resize(static_cast<std::size_t>(p.part(0)));
    for (std::size_t j = 0; j < out.size(); ++j) {
        long cnt = 0;
        for (std::size_t i = 0; i < p.length(); ++i)
            if (p.part(i) >= static_cast<long>(j + 1)) ++cnt;
        out[j] = cnt;
    }
    return Partition(std::move(out));
}

DiagramStats diagram_stats(const Partition& p, long i, long j) {
    if (i < 1 || j < 1 || static_cast<std::size_t>(i) > p.length() || j > p.part(i - 1))
        throw std::domain_error("cell outside the Young diagram");
    Partition c = conjugate(p);
    return DiagramStats{p.part(i - 1) - j, j - 1, c.part(j - 1) - i, i - 1};
}

FrobeniusCoords frobenius(const Partition& p) {
    FrobeniusCoords f;
    Partition c = conjugate(p);
    std::size_t d = p.diagonal_length();
    f.doubled_a.reserve(d);
    f.doubled_b.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        f.doubled_a.push_back(2 * (p.part(i) - static_cast<long>(i)) - 1);
        f.doubled_b.push_back(2 * (c.part(i) - static_cast<long>(i)) - 1);
    }
    return f;
}

std::pair<Partition, Partition> split_signature(const Signature& s) {
    std::vector<long> plus, minus;
    for (std::size_t i = 0; i < s.length(); ++i)
        if (s[i] >= 0) plus.push_back(s[i]);
    for (std::size_t i = s.length(); i-- > 0;)
        if (s[i] <= 0) minus.push_back(-s[i]);
    return {Partition(std::move(plus)), Partition(std::move(minus))};
}

Signature join_split(const Partition& plus, const Partition& minus, std::size_t n) {
    if (plus.length() + minus.length() > n)
        throw std::invalid_argument("split parts do not fit in signature length");
    std::vector<long> out(n, 0);
    for (std::size_t i = 0; i < plus.length(); ++i) out[i] = plus.part(i);
    for (std::size_t i = 0; i < minus.length(); ++i) out[n - 1 - i] = -minus.part(i);
    return Signature(std::move(out));
}

bool interlaces(const Signature& mu, const Signature& lambda) {
    if (lambda.length() != mu.length() + 1)
        throw std::domain_error("interlacing requires length(lambda) = length(mu) + 1");
    for (std::size_t i = 0; i < mu.length(); ++i)
        if (!(lambda[i + 1] <= mu[i] && mu[i] <= lambda[i])) return false;
    return true;
}

}  // namespace jacklab
