#pragma once
// Search bounds. Exhaustive searches refuse inputs past these sizes instead
// of silently taking forever; callers can raise them.

namespace skb {

struct Limits {
  int enumerate_max_order = 8;  // brace enumeration over a fixed star law
  int recognition_max_x = 16;   // semidirect recognition (iso search)
  int equiv_max_x = 32;         // extension equivalence (transversal search)
};

}  // namespace skb
