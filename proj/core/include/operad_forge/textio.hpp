#pragma once

#include <functional>
#include <string>

#include "operad_forge/element.hpp"
#include "operad_forge/lie.hpp"
#include "operad_forge/shleib.hpp"
#include "operad_forge/words.hpp"

namespace operad_forge {

// canonical text forms of the basis keys
std::string key_text(const LieKey& k);      // "{1,{2,3}}"
std::string key_text(const WordTuple& k);   // "d1.d2|1|d3"
std::string key_text(const LieDKey& k);     // "<lie>#<word-tuple>"
std::string key_text(const TreeMonKey& k);  // "T2(T3(1,2,3),4)"

/// "c1 · key1 + c2 · key2"; zero renders as "0". Coefficients are exact
/// rationals, negative ones keep their sign glued to the number.
template <class Key>
std::string element_text(const Element<Key>& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [k, c] : e.terms) {
        if (!first) out += " + ";
        out += scalar_to_string(c) + " · " + key_text(k);
        first = false;
    }
    return out;
}

}  // namespace operad_forge
