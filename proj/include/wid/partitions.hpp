#ifndef WID_PARTITIONS_HPP
#define WID_PARTITIONS_HPP

#include <wid/scalars.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace wid {

/// Integer partition lambda_1 >= ... >= lambda_r > 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] == 0)
                throw std::invalid_argument("partition parts must be positive");
            if (i && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    /// "3,1" -> (3,1); the empty string is the empty partition.
    static Partition parse(const std::string& text)
    {
        std::vector<std::uint32_t> parts;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
            if (item.empty())
                continue;
            if (!std::all_of(item.begin(), item.end(), ::isdigit))
                throw std::invalid_argument("bad partition part '" + item + "'");
            parts.push_back(static_cast<std::uint32_t>(std::stoul(item)));
        }
        return Partition(std::move(parts));
    }

    const std::vector<std::uint32_t>& parts() const { return parts_; }
    std::size_t rows() const { return parts_.size(); }
    std::uint32_t size() const { return std::accumulate(parts_.begin(), parts_.end(), 0u); }
    std::uint32_t row(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    /// Column lengths r_1 >= r_2 >= ... of the diagram.
    std::vector<std::uint32_t> columns() const
    {
        std::vector<std::uint32_t> c(parts_.empty() ? 0 : parts_[0], 0);
        for (auto p : parts_)
            for (std::uint32_t j = 0; j < p; ++j)
                ++c[j];
        return c;
    }

    std::string str() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i)
            s += (i ? "," : "") + std::to_string(parts_[i]);
        return s + ")";
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<std::uint32_t> parts_;
};

/// Partitions of n in reverse-lexicographic order, optionally with at most max_rows rows.
inline std::vector<Partition> partitions(std::uint32_t n, std::optional<std::size_t> max_rows = std::nullopt)
{
    std::vector<Partition> out;
    std::vector<std::uint32_t> cur;
    auto rec = [&](auto&& self, std::uint32_t left, std::uint32_t cap) -> void {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        if (max_rows && cur.size() >= *max_rows)
            return;
        for (std::uint32_t p = std::min(left, cap); p >= 1; --p) {
            cur.push_back(p);
            self(self, left - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// Number of standard Young tableaux of shape lambda, by the hook length formula.
inline Integer hook_dim(const Partition& lambda)
{
    const auto cols = lambda.columns();
    Integer num = 1;
    for (std::uint32_t i = 2; i <= lambda.size(); ++i)
        num *= i;
    Integer den = 1;
    for (std::size_t i = 0; i < lambda.rows(); ++i)
        for (std::uint32_t j = 0; j < lambda.row(i); ++j)
            den *= (lambda.row(i) - j - 1) + (cols[j] - static_cast<std::uint32_t>(i) - 1) + 1;
    return num / den;
}

/// Number of sigma in S_n with sigma^2 = id, by enumeration of S_n.
inline std::uint64_t involutions(std::uint32_t n)
{
    if (n > 10)
        throw std::invalid_argument("involutions: brute force limited to n <= 10");
    std::vector<std::uint32_t> p(n);
    std::iota(p.begin(), p.end(), 0u);
    std::uint64_t count = 0;
    do {
        bool inv = true;
        for (std::uint32_t i = 0; i < n && inv; ++i)
            inv = p[p[i]] == i;
        count += inv;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

/// [lambda] is contained in [mu] row by row.
inline bool diagram_contains(const Partition& lambda, const Partition& mu)
{
    if (lambda.rows() > mu.rows())
        return false;
    for (std::size_t i = 0; i < lambda.rows(); ++i)
        if (lambda.row(i) > mu.row(i))
            return false;
    return true;
}

/// Inclusion-minimal elements of P (duplicates collapsed), in input order.
inline std::vector<Partition> minimal_diagrams(const std::vector<Partition>& set)
{
    std::vector<Partition> out;
    for (std::size_t i = 0; i < set.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < set.size() && minimal; ++j)
            if (set[j] != set[i] && diagram_contains(set[j], set[i]))
                minimal = false;
        if (minimal && std::find(out.begin(), out.end(), set[i]) == out.end())
            out.push_back(set[i]);
    }
    return out;
}

}  // namespace wid

#endif  // WID_PARTITIONS_HPP
