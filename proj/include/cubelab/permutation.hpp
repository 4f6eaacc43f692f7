#pragma once

#include <cctype>
#include <numeric>
#include <string>
#include <vector>

#include "cubelab/errors.hpp"

namespace cubelab {

// Permutation of the symbols 1..t. Stored 0-based internally; the public
// accessors use the 1-based convention of cycle notation.
class Permutation {
public:
    explicit Permutation(int t) : img_(t) { std::iota(img_.begin(), img_.end(), 0); }

    static Permutation from_images_1based(const std::vector<int>& images) {
        Permutation p(static_cast<int>(images.size()));
        std::vector<char> seen(images.size(), 0);
        for (size_t i = 0; i < images.size(); ++i) {
            int v = images[i];
            if (v < 1 || v > static_cast<int>(images.size()) || seen[v - 1])
                throw GraphError(Err::NotABijection, "image array is not a bijection");
            seen[v - 1] = 1;
            p.img_[i] = v - 1;
        }
        return p;
    }

    int size() const { return static_cast<int>(img_.size()); }

    // image of 1-based symbol i
    int apply(int i) const { return img_[i - 1] + 1; }

    int apply0(int i) const { return img_[i]; }

    void set(int i, int image) { img_[i - 1] = image - 1; }   // 1-based

    Permutation inverse() const {
        Permutation p(size());
        for (int i = 0; i < size(); ++i) p.img_[img_[i]] = i;
        return p;
    }

    bool is_involution() const {
        for (int i = 0; i < size(); ++i)
            if (img_[img_[i]] != i) return false;
        return true;
    }

    std::vector<int> fixed_points() const {   // 1-based
        std::vector<int> fp;
        for (int i = 0; i < size(); ++i)
            if (img_[i] == i) fp.push_back(i + 1);
        return fp;
    }

    bool operator==(const Permutation& o) const { return img_ == o.img_; }

    // Cycle notation with fixed points suppressed, e.g. "(1 2)(5 7)".
    std::string cycle_notation() const {
        std::string out;
        std::vector<char> done(size(), 0);
        for (int i = 0; i < size(); ++i) {
            if (done[i] || img_[i] == i) continue;
            out += "(";
            int x = i;
            bool first = true;
            while (!done[x]) {
                done[x] = 1;
                if (!first) out += " ";
                out += std::to_string(x + 1);
                first = false;
                x = img_[x];
            }
            out += ")";
        }
        if (out.empty()) out = "()";
        return out;
    }

    // Parses cycle notation over 1..t, e.g. "(1 2)(3 4)"; symbols not
    // mentioned are fixed points. Commas are accepted as separators.
    static Permutation parse_cycles(const std::string& text, int t) {
        Permutation p(t);
        size_t i = 0;
        auto skip_ws = [&] {
            while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
        };
        skip_ws();
        if (i == text.size()) return p;
        while (i < text.size()) {
            skip_ws();
            if (i == text.size()) break;
            if (text[i] != '(') throw GraphError(Err::ParseError, "expected '(' in cycle notation");
            ++i;
            std::vector<int> cyc;
            while (true) {
                skip_ws();
                if (i < text.size() && text[i] == ')') {
                    ++i;
                    break;
                }
                if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw GraphError(Err::ParseError, "expected symbol or ')' in cycle notation");
                int v = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    v = v * 10 + (text[i++] - '0');
                if (v < 1 || v > t) throw GraphError(Err::ParseError, "symbol out of range: " + std::to_string(v));
                cyc.push_back(v);
            }
            for (size_t k = 0; k < cyc.size(); ++k) {
                int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
                if (p.img_[from - 1] != from - 1)
                    throw GraphError(Err::ParseError, "symbol repeated: " + std::to_string(from));
                p.img_[from - 1] = to - 1;
            }
        }
        std::vector<char> seen(t, 0);
        for (int v : p.img_) {
            if (seen[v]) throw GraphError(Err::NotABijection, "cycles overlap");
            seen[v] = 1;
        }
        return p;
    }

private:
    std::vector<int> img_;
};

} // namespace cubelab
