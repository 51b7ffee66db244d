#include "operad_forge/textio.hpp"

namespace operad_forge {

std::string key_text(const LieKey& k) { return k.to_word().text(); }

std::string key_text(const WordTuple& k) { return k.text(); }

std::string key_text(const LieDKey& k) {
    return key_text(k.first) + "#" + key_text(k.second);
}

std::string key_text(const TreeMonKey& k) { return k.text(); }

}  // namespace operad_forge
