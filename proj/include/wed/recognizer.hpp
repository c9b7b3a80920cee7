// recognizer.hpp - structural WED recognizers for graphs with one triangle,
// girth >= 5, and triangle-free non-bipartite graphs.
#pragma once

#include <array>
#include <optional>
#include <string>

#include "wed/graph.hpp"
#include "wed/structures.hpp"

namespace wed {

enum class Verdict {
  SpecialK3,
  SpecialHouse,
  SpecialDreamHouse,
  SpecialCrystal,
  MemberT,
  MemberF,
  NotWED,
};

struct Classification {
  Verdict verdict = Verdict::NotWED;
  std::array<int, 3> triangle{};
  std::optional<FamilyWitness> witness;  // MemberT / MemberF only
  std::string reason;                    // NotWED only

  bool is_wed() const { return verdict != Verdict::NotWED; }
};

std::string verdict_name(Verdict v);

// Decides WED for a connected graph with exactly one triangle:
//   1. K3, H, DH, Cr by isomorphism;
//   2. T-pattern: triangle xyz with deg x = deg y = 2; G' = G - {x, y};
//   3. F-pattern: house x, y, s, t hanging off apex z; G' = G - {x, y, s, t};
//   both require G' connected bipartite WED with |A| < |B|, z in B and z
//   detachable (strongly, for F);
//   4. otherwise not WED.
// The bipartite base is checked with the exhaustive WED oracle.
// Throws PreconditionError if g is disconnected or has != 1 triangle.
Classification classify_one_triangle(const Graph& g);

// Connected graphs of girth >= 5 (forests included): K2, C5, C7, or bipartite
// with one side equal to the set of support vertices.
bool recognize_girth5(const Graph& g);

// Connected non-bipartite triangle-free graphs: C5, C7 or C7*.
bool recognize_girth4_nonbipartite(const Graph& g);

}  // namespace wed
