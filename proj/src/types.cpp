#include "tits/types.hpp"

#include <cctype>

namespace tits {

char kind_char(Kind k) {
  switch (k) {
    case Kind::A: return 'A';
    case Kind::B: return 'B';
    case Kind::C: return 'C';
    case Kind::D: return 'D';
    case Kind::E: return 'E';
    case Kind::F: return 'F';
    case Kind::G: return 'G';
  }
  return '?';
}

Kind parse_kind(const std::string& s) {
  if (s.size() != 1) throw std::invalid_argument("unknown root system kind: '" + s + "'");
  switch (std::toupper(static_cast<unsigned char>(s[0]))) {
    case 'A': return Kind::A;
    case 'B': return Kind::B;
    case 'C': return Kind::C;
    case 'D': return Kind::D;
    case 'E': return Kind::E;
    case 'F': return Kind::F;
    case 'G': return Kind::G;
    default: break;
  }
  throw std::invalid_argument("unknown root system kind: '" + s + "'");
}

std::string CartanType::name() const {
  return std::string(1, kind_char(kind)) + std::to_string(rank);
}

bool is_valid_type(Kind kind, int rank) {
  switch (kind) {
    case Kind::A: return rank >= 1;
    case Kind::B:
    case Kind::C: return rank >= 2;
    case Kind::D: return rank >= 4;
    case Kind::E: return rank >= 6 && rank <= 8;
    case Kind::F: return rank == 4;
    case Kind::G: return rank == 2;
  }
  return false;
}

void require_valid_type(Kind kind, int rank) {
  if (!is_valid_type(kind, rank)) {
    throw std::domain_error("invalid irreducible type " + std::string(1, kind_char(kind)) +
                            std::to_string(rank));
  }
}

}  // namespace tits
