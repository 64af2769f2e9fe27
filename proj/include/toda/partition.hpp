#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace toda {

struct PartitionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Integer partition with weakly decreasing positive parts. Zero parts are
/// never stored; the empty partition is the default-constructed value.
class Partition {
public:
    Partition() = default;

    /// Accepts parts in any order and drops zeros. Negative parts are rejected.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (int p : parts_)
            if (p < 0)
                throw PartitionError("negative part in partition");
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
        while (!parts_.empty() && parts_.back() == 0)
            parts_.pop_back();
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int size() const noexcept
    {
        int s = 0;
        for (int p : parts_)
            s += p;
        return s;
    }
    bool empty() const noexcept { return parts_.empty(); }

    /// 1-based part access; parts beyond the length are 0.
    int part(int k) const noexcept
    {
        return (k >= 1 && k <= length()) ? parts_[static_cast<std::size_t>(k - 1)] : 0;
    }

    /// Multiplicity of parts equal to j.
    int multiplicity(int j) const noexcept
    {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), j));
    }

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

    /// "7,5,4,4,1"; the empty partition prints as "".
    std::string to_string() const
    {
        std::string out;
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (k)
                out += ',';
            out += std::to_string(parts_[k]);
        }
        return out;
    }

    /// Parses "a,b,c". Both "" and "[]" denote the empty partition. Parts must
    /// already be weakly decreasing.
    static Partition parse(std::string_view text)
    {
        auto trim = [](std::string_view s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
                s.remove_prefix(1);
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
                s.remove_suffix(1);
            return s;
        };
        text = trim(text);
        if (text.size() >= 2 && text.front() == '[' && text.back() == ']')
            text = trim(text.substr(1, text.size() - 2));
        std::vector<int> parts;
        if (text.empty())
            return Partition{};
        while (true) {
            auto comma = text.find(',');
            auto token = trim(text.substr(0, comma));
            int value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || value <= 0)
                throw PartitionError("malformed partition string: '" + std::string(text) + "'");
            if (!parts.empty() && value > parts.back())
                throw PartitionError("partition parts must be weakly decreasing");
            parts.push_back(value);
            if (comma == std::string_view::npos)
                break;
            text.remove_prefix(comma + 1);
        }
        return Partition(std::move(parts));
    }

private:
    std::vector<int> parts_;
};

/// Number of parts >= i (the column length lambda^t_i). Zero when i > lambda_1.
inline int u_index(const Partition& lambda, int i)
{
    if (i < 1)
        throw PartitionError("u_index requires i >= 1");
    int u = 0;
    while (u < lambda.length() && lambda.part(u + 1) >= i)
        ++u;
    return u;
}

/// lambda "raised" at i: insert a part i as deep as possible, then decrement
/// every part above it together with the new part.
inline Partition raise(const Partition& lambda, int i)
{
    const int u = u_index(lambda, i);
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(lambda.length()) + 1);
    for (int k = 1; k <= u; ++k)
        parts.push_back(lambda.part(k) - 1);
    parts.push_back(i - 1);
    for (int k = u + 1; k <= lambda.length(); ++k)
        parts.push_back(lambda.part(k));
    return Partition(std::move(parts));
}

/// lambda "lowered" at j: remove part j (0 if j exceeds the length) and
/// increment every earlier part.
inline Partition lower(const Partition& lambda, int j)
{
    if (j < 1)
        throw PartitionError("lower requires j >= 1");
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(std::max(lambda.length(), j)));
    for (int k = 1; k < j; ++k)
        parts.push_back(lambda.part(k) + 1);
    for (int k = j + 1; k <= lambda.length(); ++k)
        parts.push_back(lambda.part(k));
    return Partition(std::move(parts));
}

inline int raise_size(const Partition& lambda, int i)
{
    return lambda.size() + i - u_index(lambda, i) - 1;
}

inline int lower_size(const Partition& lambda, int j)
{
    if (j < 1)
        throw PartitionError("lower requires j >= 1");
    return lambda.size() + j - lambda.part(j) - 1;
}

inline Partition conjugate(const Partition& lambda)
{
    std::vector<int> parts;
    const int width = lambda.part(1);
    parts.reserve(static_cast<std::size_t>(width));
    for (int i = 1; i <= width; ++i)
        parts.push_back(u_index(lambda, i));
    return Partition(std::move(parts));
}

/// Content col - row of every cell, listed row by row.
inline std::vector<int> contents(const Partition& lambda)
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(lambda.size()));
    for (int row = 1; row <= lambda.length(); ++row)
        for (int col = 1; col <= lambda.part(row); ++col)
            out.push_back(col - row);
    return out;
}

/// Product of factorials of part multiplicities.
inline std::uint64_t aut_size(const Partition& lambda)
{
    std::uint64_t out = 1;
    int run = 0;
    for (int k = 1; k <= lambda.length(); ++k) {
        run = (k > 1 && lambda.part(k) == lambda.part(k - 1)) ? run + 1 : 1;
        out *= static_cast<std::uint64_t>(run);
    }
    return out;
}

/// All partitions of d in reverse lexicographic order: (d), (d-1,1), ...
inline std::vector<Partition> enumerate_partitions(int d)
{
    std::vector<Partition> out;
    if (d < 0)
        return out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    rec(rec, d, d);
    return out;
}

/// Partitions of every size 0..max_size, grouped by size.
inline std::vector<Partition> partitions_up_to(int max_size)
{
    std::vector<Partition> out;
    for (int d = 0; d <= max_size; ++d) {
        auto level = enumerate_partitions(d);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

/// The (at most one) i >= 1 with |raise(lambda, i)| == target. Sizes are
/// strictly increasing in i, so the scan stops as soon as they pass target.
inline std::optional<int> solve_raise_size(const Partition& lambda, int target)
{
    for (int i = 1;; ++i) {
        const int s = raise_size(lambda, i);
        if (s == target)
            return i;
        if (s > target)
            return std::nullopt;
    }
}

inline std::vector<int> solve_raise_sizes(const Partition& lambda, int target)
{
    auto i = solve_raise_size(lambda, target);
    return i ? std::vector<int>{*i} : std::vector<int>{};
}

inline std::optional<int> solve_lower_size(const Partition& mu, int target)
{
    for (int j = 1;; ++j) {
        const int s = lower_size(mu, j);
        if (s == target)
            return j;
        if (s > target)
            return std::nullopt;
    }
}

inline std::vector<int> solve_lower_sizes(const Partition& mu, int target)
{
    auto j = solve_lower_size(mu, target);
    return j ? std::vector<int>{*j} : std::vector<int>{};
}

/// First `depth` entries of the Maya sequence {lambda_i - i}.
inline std::vector<int> maya_prefix(const Partition& lambda, int depth)
{
    if (depth < lambda.length())
        throw PartitionError("maya_prefix depth " + std::to_string(depth) + " is below the partition length " +
                             std::to_string(lambda.length()));
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(depth));
    for (int i = 1; i <= depth; ++i)
        out.push_back(lambda.part(i) - i);
    return out;
}

/// Inverse of maya_prefix for any prefix that reaches past the last part.
inline Partition from_maya_prefix(const std::vector<int>& prefix)
{
    std::vector<int> parts;
    for (std::size_t k = 0; k < prefix.size(); ++k) {
        const int part = prefix[k] + static_cast<int>(k) + 1;
        if (part < 0)
            throw PartitionError("sequence is not a Maya prefix");
        parts.push_back(part);
    }
    for (std::size_t k = 1; k < parts.size(); ++k)
        if (parts[k] > parts[k - 1])
            throw PartitionError("sequence is not strictly decreasing");
    return Partition(std::move(parts));
}

/// The partition with r in front of eta (r >= eta_1).
inline Partition prepend_part(int r, const Partition& eta)
{
    if (r < eta.part(1))
        throw PartitionError("prepended part must dominate the remaining parts");
    std::vector<int> parts{r};
    parts.insert(parts.end(), eta.parts().begin(), eta.parts().end());
    return Partition(std::move(parts));
}

/// Partition without its first part.
inline Partition tail(const Partition& lambda)
{
    if (lambda.empty())
        return lambda;
    return Partition(std::vector<int>(lambda.parts().begin() + 1, lambda.parts().end()));
}

/// 1^s + eta: add one to each of the first s parts of eta (s >= length(eta)).
inline Partition add_column(int s, const Partition& eta)
{
    if (s < eta.length())
        throw PartitionError("column height must cover the partition length");
    std::vector<int> parts;
    for (int k = 1; k <= s; ++k)
        parts.push_back(eta.part(k) + 1);
    return Partition(std::move(parts));
}

/// Inverse of add_column with s = length(lambda).
inline Partition remove_column(const Partition& lambda)
{
    std::vector<int> parts;
    for (int p : lambda.parts())
        parts.push_back(p - 1);
    return Partition(std::move(parts));
}

}  // namespace toda
