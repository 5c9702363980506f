#ifndef TRI4_PERM5_HPP
#define TRI4_PERM5_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include "tri4/errors.hpp"

namespace tri4 {

/**
 * A bijection of the five vertex slots {0,...,4} of a pentachoron.
 *
 * Facet gluings carry one of these: slot s of the source pentachoron is
 * identified with slot image[s] of the target. Stored densely; composition
 * and inversion are constant-time.
 */
class Perm5 {
public:
    constexpr Perm5() : image_{0, 1, 2, 3, 4} {}

    static Perm5 from_images(const std::array<std::uint8_t, 5>& images) {
        Perm5 p;
        bool seen[5] = {false, false, false, false, false};
        for (int s = 0; s < 5; ++s) {
            if (images[s] > 4 || seen[images[s]])
                throw UserError("Perm5: images do not form a bijection of {0..4}");
            seen[images[s]] = true;
            p.image_[s] = images[s];
        }
        return p;
    }

    static constexpr Perm5 identity() { return Perm5(); }

    std::uint8_t operator[](int slot) const { return image_[slot]; }

    Perm5 inverse() const {
        Perm5 out;
        for (int s = 0; s < 5; ++s)
            out.image_[image_[s]] = static_cast<std::uint8_t>(s);
        return out;
    }

    // (a.then(b))[s] == b[a[s]]
    Perm5 then(const Perm5& next) const {
        Perm5 out;
        for (int s = 0; s < 5; ++s)
            out.image_[s] = next.image_[image_[s]];
        return out;
    }

    bool is_identity() const {
        for (int s = 0; s < 5; ++s)
            if (image_[s] != s) return false;
        return true;
    }

    // +1 for even permutations, -1 for odd.
    int sign() const {
        int inversions = 0;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                if (image_[i] > image_[j]) ++inversions;
        return (inversions % 2 == 0) ? 1 : -1;
    }

    // Five digits, the image of each slot in order; identity is "01234".
    std::string digits() const {
        std::string s(5, '0');
        for (int i = 0; i < 5; ++i)
            s[i] = static_cast<char>('0' + image_[i]);
        return s;
    }

    static Perm5 from_digits(const std::string& digits) {
        if (digits.size() != 5)
            throw UserError("Perm5: expected exactly 5 digits, got '" + digits + "'");
        std::array<std::uint8_t, 5> images{};
        for (int i = 0; i < 5; ++i) {
            if (digits[i] < '0' || digits[i] > '4')
                throw UserError("Perm5: bad digit in '" + digits + "'");
            images[i] = static_cast<std::uint8_t>(digits[i] - '0');
        }
        return from_images(images);
    }

    friend bool operator==(const Perm5&, const Perm5&) = default;
    friend auto operator<=>(const Perm5&, const Perm5&) = default;

private:
    std::array<std::uint8_t, 5> image_;
};

} // namespace tri4

#endif
