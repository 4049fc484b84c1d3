#include "skewsym/errors.hpp"

#include <utility>

namespace skewsym {

ParseError::ParseError(const std::string& what, std::string token)
    : Error(what + ": '" + token + "'"), token_(std::move(token)) {}

}  // namespace skewsym
