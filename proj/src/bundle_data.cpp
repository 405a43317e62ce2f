#include "taulab/diagram.hpp"

// Embedded copies of the bundled data files; kept byte-identical to the
// versions under data/ (a test enforces the equality).

namespace taulab {

const std::string& bundled_figure1_json() {
  static const std::string text = R"TAULAB_DATA({
  "nodes": [
    {
      "serial": 0,
      "operator": "S1",
      "source": "Gamma",
      "target": "Gamma",
      "name": "S1(Gamma,Gamma)",
      "non": "b",
      "non_is_new": false
    },
    {
      "serial": 1,
      "operator": "S1",
      "source": "Gamma",
      "target": "Tau",
      "name": "S1(Gamma,Tau)",
      "non": "b",
      "non_is_new": true
    },
    {
      "serial": 2,
      "operator": "S1",
      "source": "Gamma",
      "target": "Omega",
      "name": "S1(Gamma,Omega)",
      "non": "d",
      "non_is_new": false
    },
    {
      "serial": 3,
      "operator": "S1",
      "source": "Gamma",
      "target": "O",
      "name": "S1(Gamma,O)",
      "non": "d",
      "non_is_new": false
    },
    {
      "serial": 4,
      "operator": "S1",
      "source": "Tau",
      "target": "Gamma",
      "name": "S1(Tau,Gamma)",
      "non": "t",
      "non_is_new": false
    },
    {
      "serial": 5,
      "operator": "S1",
      "source": "Tau",
      "target": "Tau",
      "name": "S1(Tau,Tau)",
      "non": "t",
      "non_is_new": true
    },
    {
      "serial": 6,
      "operator": "S1",
      "source": "Tau",
      "target": "Omega",
      "name": "S1(Tau,Omega)",
      "non": "od",
      "non_is_new": true
    },
    {
      "serial": 7,
      "operator": "S1",
      "source": "Tau",
      "target": "O",
      "name": "S1(Tau,O)",
      "non": "od",
      "non_is_new": true
    },
    {
      "serial": 8,
      "operator": "S1",
      "source": "Omega",
      "target": "Gamma",
      "name": "S1(Omega,Gamma)",
      "non": "p",
      "non_is_new": false
    },
    {
      "serial": 9,
      "operator": "S1",
      "source": "Omega",
      "target": "Tau",
      "name": "S1(Omega,Tau)",
      "non": "p",
      "non_is_new": false
    },
    {
      "serial": 10,
      "operator": "S1",
      "source": "Omega",
      "target": "Omega",
      "name": "S1(Omega,Omega)",
      "non": "cov_M",
      "non_is_new": false
    },
    {
      "serial": 11,
      "operator": "S1",
      "source": "O",
      "target": "O",
      "name": "S1(O,O)",
      "non": "cov_M",
      "non_is_new": false
    },
    {
      "serial": 12,
      "operator": "Sfin",
      "source": "Gamma",
      "target": "Tau",
      "name": "Sfin(Gamma,Tau)",
      "non": "b",
      "non_is_new": true
    },
    {
      "serial": 13,
      "operator": "Sfin",
      "source": "Gamma",
      "target": "Omega",
      "name": "Sfin(Gamma,Omega)",
      "non": "d",
      "non_is_new": false
    },
    {
      "serial": 14,
      "operator": "Sfin",
      "source": "Tau",
      "target": "Tau",
      "name": "Sfin(Tau,Tau)",
      "non": "min(s,b)",
      "non_is_new": true
    },
    {
      "serial": 15,
      "operator": "Sfin",
      "source": "Tau",
      "target": "Omega",
      "name": "Sfin(Tau,Omega)",
      "non": "d",
      "non_is_new": false
    },
    {
      "serial": 16,
      "operator": "Sfin",
      "source": "Omega",
      "target": "Tau",
      "name": "Sfin(Omega,Tau)",
      "non": "p",
      "non_is_new": false
    },
    {
      "serial": 17,
      "operator": "Sfin",
      "source": "Omega",
      "target": "Omega",
      "name": "Sfin(Omega,Omega)",
      "non": "d",
      "non_is_new": false
    },
    {
      "serial": 18,
      "operator": "Ufin",
      "source": "O",
      "target": "Gamma",
      "name": "Ufin(O,Gamma)",
      "non": "b",
      "non_is_new": false
    },
    {
      "serial": 19,
      "operator": "Ufin",
      "source": "O",
      "target": "Tau",
      "name": "Ufin(O,Tau)",
      "non": "max(b,s)",
      "non_is_new": false
    },
    {
      "serial": 20,
      "operator": "Ufin",
      "source": "O",
      "target": "Omega",
      "name": "Ufin(O,Omega)",
      "non": "d",
      "non_is_new": false
    },
    {
      "serial": 21,
      "operator": "Sfin",
      "source": "O",
      "target": "O",
      "name": "Sfin(O,O)",
      "non": "d",
      "non_is_new": false
    }
  ],
  "edges": [
    [
      0,
      1
    ],
    [
      0,
      18
    ],
    [
      1,
      2
    ],
    [
      1,
      12
    ],
    [
      2,
      3
    ],
    [
      2,
      13
    ],
    [
      3,
      21
    ],
    [
      4,
      0
    ],
    [
      4,
      5
    ],
    [
      5,
      1
    ],
    [
      5,
      6
    ],
    [
      5,
      14
    ],
    [
      6,
      2
    ],
    [
      6,
      7
    ],
    [
      6,
      15
    ],
    [
      7,
      3
    ],
    [
      8,
      4
    ],
    [
      8,
      9
    ],
    [
      9,
      5
    ],
    [
      9,
      10
    ],
    [
      9,
      16
    ],
    [
      10,
      6
    ],
    [
      10,
      11
    ],
    [
      10,
      17
    ],
    [
      11,
      7
    ],
    [
      12,
      13
    ],
    [
      12,
      19
    ],
    [
      13,
      20
    ],
    [
      14,
      12
    ],
    [
      14,
      15
    ],
    [
      15,
      13
    ],
    [
      16,
      14
    ],
    [
      16,
      17
    ],
    [
      17,
      15
    ],
    [
      18,
      19
    ],
    [
      19,
      20
    ],
    [
      20,
      21
    ]
  ]
}
)TAULAB_DATA";
  return text;
}

const std::string& bundled_kb_json() {
  static const std::string text = R"TAULAB_DATA({
  "atoms": [
    "p",
    "t",
    "b",
    "s",
    "d",
    "cov_M",
    "od",
    "theta_star",
    "E_star",
    "h",
    "g",
    "u",
    "aleph1"
  ],
  "provable_le": [
    {
      "le": [
        "aleph1",
        "p"
      ],
      "why": "classical: every characteristic here is uncountable"
    },
    {
      "le": [
        "p",
        "t"
      ],
      "why": "classical (van Douwen diagram)"
    },
    {
      "le": [
        "t",
        "h"
      ],
      "why": "classical (Balcar-Pelant-Simon)"
    },
    {
      "le": [
        "h",
        "s"
      ],
      "why": "classical (Balcar-Pelant-Simon)"
    },
    {
      "le": [
        "h",
        "b"
      ],
      "why": "classical (Balcar-Pelant-Simon)"
    },
    {
      "le": [
        "b",
        "d"
      ],
      "why": "classical (van Douwen diagram)"
    },
    {
      "le": [
        "s",
        "d"
      ],
      "why": "classical (van Douwen diagram)"
    },
    {
      "le": [
        "p",
        "cov_M"
      ],
      "why": "classical (Bell's theorem)"
    },
    {
      "le": [
        "cov_M",
        "d"
      ],
      "why": "classical (Cichon diagram)"
    },
    {
      "le": [
        "cov_M",
        "od"
      ],
      "why": "od lower bound via serials 11 -> 7"
    },
    {
      "le": [
        "od",
        "d"
      ],
      "why": "od upper bound via serials 7 -> 3"
    },
    {
      "le": [
        "od",
        "theta_star"
      ],
      "why": "od bounded by the f-sequence characteristic"
    },
    {
      "le": [
        "t",
        "od"
      ],
      "why": "monotone critical values along serials 5 -> 6"
    },
    {
      "le": [
        "cov_M",
        "E_star"
      ],
      "why": "everywhere-different families over N restrict to products"
    },
    {
      "le": [
        "h",
        "g"
      ],
      "why": "classical (Blass-Laflamme)"
    },
    {
      "le": [
        "g",
        "d"
      ],
      "why": "classical (groupwise density below dominating)"
    },
    {
      "le": [
        "b",
        "u"
      ],
      "why": "classical (via the reaping number)"
    }
  ],
  "con_lt": [
    {
      "lt": [
        "t",
        "h"
      ],
      "why": "consistency: tower below distributivity (classical)"
    },
    {
      "lt": [
        "s",
        "b"
      ],
      "why": "Laver-style model: splitting small, bounding large"
    },
    {
      "lt": [
        "theta_star",
        "b"
      ],
      "why": "Laver-style model: theta_star small, bounding large"
    },
    {
      "lt": [
        "theta_star",
        "d"
      ],
      "why": "Miller-style model: theta_star small, dominating large"
    },
    {
      "lt": [
        "theta_star",
        "h"
      ],
      "why": "Mathias-style model: theta_star small, distributivity large"
    }
  ]
}
)TAULAB_DATA";
  return text;
}

const std::string& bundled_table2_grid() {
  static const std::string text = R"TAULAB_DATA(++++--------++-?--++++
?+++--------++-?--?+++
--++---------+-?----++
---+-----------------+
++++++++--??++++-?++++
?+++?+++--??++++-??+++
--++--++--??-+-+-?--++
---+---+---?---------+
++++++++++++++++++++++
?+++?+++?+++++++++?+++
--++--++--++-+-+-+--++
---+---+---+---------+
????--------++-?--?+++
-------------+-?----++
????--------++++-??+++
-------------+-+-?--++
????????????++++++?+++
-------------+-+-+--++
-------------?-?--++++
-------------?-?---+++
-------------?-?----++
---------------------+
)TAULAB_DATA";
  return text;
}

const std::string& bundled_framed_grid() {
  static const std::string text = R"TAULAB_DATA(.....XXX......X.......
.....XXX......X.......
......XX..............
.......X..............
......................
......................
......................
......................
......................
......................
......................
......................
.....XXX......X.......
......................
....XXXX..XX..........
......................
......................
......................
......................
......................
......................
......................
)TAULAB_DATA";
  return text;
}

}  // namespace taulab

