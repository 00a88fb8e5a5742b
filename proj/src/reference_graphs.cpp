#include "kemeny/reference_graphs.hpp"

#include <stdexcept>
#include <string>

namespace kemeny {

namespace {

// 4-cycle v1-p-w1-q, complete graph on {v2,r,s,w2}, star at v3; bridges
// w1~v2 and w2~v3. v1 and w1 are opposite corners of the cycle; w3 is a
// star leaf.
const char* kChainText =
    "v1 p\n"
    "p w1\n"
    "w1 q\n"
    "q v1\n"
    "v2 r\n"
    "v2 s\n"
    "v2 w2\n"
    "r s\n"
    "r w2\n"
    "s w2\n"
    "v3 t\n"
    "v3 w3\n"
    "v3 u\n"
    "w1 v2\n"
    "w2 v3\n";

// Two 4-cycles sharing the vertex c; f1 and f2 are the far corners.
const char* kTwoSquaresText =
    "c m1\n"
    "c m2\n"
    "m1 f1\n"
    "m2 f1\n"
    "c m3\n"
    "c m4\n"
    "m3 f2\n"
    "m4 f2\n";

// 5-cycle a-b-c-d-e with the chord a-c; b sits between the chord ends.
const char* kC5ChordText =
    "a b\n"
    "b c\n"
    "c d\n"
    "d e\n"
    "e a\n"
    "a c\n";

}  // namespace

const Graph& reference_graph(std::string_view name) {
  static const Graph chain = Graph::parse(kChainText);
  static const Graph squares = Graph::parse(kTwoSquaresText);
  static const Graph c5 = Graph::parse(kC5ChordText);
  if (name == "c4-k4-s4-chain") return chain;
  if (name == "two-squares") return squares;
  if (name == "c5-chord") return c5;
  throw std::invalid_argument("unknown reference graph: " + std::string(name));
}

std::vector<std::string_view> reference_graph_names() {
  return {"c4-k4-s4-chain", "two-squares", "c5-chord"};
}

}  // namespace kemeny
