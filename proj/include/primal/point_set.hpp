#ifndef PRIMAL_POINT_SET_HPP
#define PRIMAL_POINT_SET_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace primal {

using Point = std::uint32_t;

// A subset of the finite universe {0, ..., universe-1}, stored as a bitset.
// Binary operations require both operands to share the same universe.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t universe);
  PointSet(std::size_t universe, std::initializer_list<Point> points);

  static PointSet full(std::size_t universe);
  static PointSet singleton(std::size_t universe, Point x);
  static PointSet from_points(std::size_t universe, const std::vector<Point>& points);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Point x) const noexcept {
    return (words_[x >> 6] >> (x & 63)) & 1u;
  }
  void insert(Point x) noexcept { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void erase(Point x) noexcept { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_full() const noexcept { return count() == universe_; }

  bool subset_of(const PointSet& other) const noexcept;
  bool intersects(const PointSet& other) const noexcept;

  PointSet& operator|=(const PointSet& other) noexcept;
  PointSet& operator&=(const PointSet& other) noexcept;
  PointSet operator|(const PointSet& other) const;
  PointSet operator&(const PointSet& other) const;
  PointSet complement() const;

  // Ascending member list.
  std::vector<Point> members() const;

  // Calls fn(x) for each member in ascending order.
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = __builtin_ctzll(bits);
        fn(static_cast<Point>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const noexcept;

  bool operator==(const PointSet& other) const noexcept = default;
  // Lexicographic order on ascending member lists.
  bool lex_less(const PointSet& other) const;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct PointSetHash {
  std::size_t operator()(const PointSet& s) const noexcept { return s.hash(); }
};

}  // namespace primal

#endif  // PRIMAL_POINT_SET_HPP
