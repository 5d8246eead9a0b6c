#pragma once

// Regression corpus for `sing corpus`: published Betti diagrams (nonzero rows other
// than row 0, as printed) and Hilbert polynomials of the example arrangements.

#include <string>
#include <vector>

namespace corpus {

enum class Which { jacobian, top, radical };

struct Entry {
  std::string name;
  std::string file;
  Which which;
  std::vector<std::string> rows;  // e.g. "13: - 4 - -"
  std::string total;              // e.g. "1 4 4 1"
  std::string hilbert;            // empty when not recorded
};

inline const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = {
      {"fifteen planes J", "fifteen_planes.arr", Which::jacobian, {"13: - 4 - -", "17: - - 4 1"}, "1 4 4 1",
       "130t - 1150"},
      {"fifteen planes radical", "fifteen_planes.arr", Which::radical, {"9: - 11 10"}, "1 11 10", "55t - 275"},
      {"seven planes J", "seven_planes.arr", Which::jacobian, {"5: - 4 -", "6: - - 3"}, "1 4 3", "24t - 64"},
      {"seven planes radical", "seven_planes.arr", Which::radical, {"4: - 6 5"}, "1 6 5", "15t - 25"},
      {"embedded point J", "emb_pt.arr", Which::jacobian, {"2: - 3 - -", "3: - - 3 1"}, "1 3 3 1", "6t - 1"},
      {"embedded point top", "emb_pt.arr", Which::top, {}, "", "6t - 2"},
      {"embedded point + plane J", "emb_pt_general.arr", Which::jacobian, {}, "", "10t - 9"},
      {"embedded point + plane top", "emb_pt_general.arr", Which::top, {}, "", "10t - 10"},
      {"free not CM radical", "free_not_cm.arr", Which::radical, {"6: - 9 9 1"}, "1 9 9 1", ""},
      {"free not CM J", "free_not_cm.arr", Which::jacobian, {"8: - 4 -", "10: - - 3"}, "1 4 3", ""},
      {"same comb F top", "same_comb_F.arr", Which::top, {"8: - 4 1", "9: - 4 6"}, "1 8 7", ""},
      {"same comb F' top", "same_comb_F_prime.arr", Which::top, {"8: - 5 1", "9: - 1 3", "10: - - 1"}, "1 6 5", ""},
      {"same comb F radical", "same_comb_F.arr", Which::radical, {"6: - 4 -", "7: - - 3", "8: - 1 1"}, "1 5 4", ""},
      {"same comb F' radical", "same_comb_F_prime.arr", Which::radical, {"6: - 4 1", "7: - 1 3", "8: - 1 1"},
       "1 6 5", ""},
      {"same comb F J", "same_comb_F.arr", Which::jacobian, {"8: - 4 1 -", "13: - - 6 4"}, "1 4 7 4", "51t - 223"},
      {"same comb F' J", "same_comb_F_prime.arr", Which::jacobian,
       {"8: - 4 1 -", "12: - - 1 -", "13: - - 3 1", "14: - - - 1"}, "1 4 5 2", "51t - 222"},
      {"octahedron radical", "octahedron.graph", Which::radical, {"9: - 16 20 5"}, "1 16 20 5", "50t - 230"},
      {"octahedron top", "octahedron.graph", Which::top, {"10: - 5 - -", "11: - 1 2 -", "12: - - 4 1"}, "1 6 6 1",
       "74t - 454"},
      {"nine-plane block top", "nine_planes.arr", Which::top, {"7: - 4 - -", "9: - - 4 1"}, "1 4 4 1", ""},
      {"eight-plane block radical", "radical_block.arr", Which::radical, {"5: - 8 8 1"}, "1 8 8 1", ""},
      {"eleven planes top", "eleven_planes.arr", Which::top, {"9: - 4 - -", "11: - 3 8 2"}, "1 7 8 2", ""},
  };
  return list;
}

}  // namespace corpus
