#include "stal/algebra.hpp"

namespace stal::detail {

namespace {

const char* const kRcc8 = R"json(
{
 "name": "rcc8",
 "arity": 2,
 "atoms": [
  "DC",
  "EC",
  "PO",
  "TPP",
  "NTPP",
  "TPPi",
  "NTPPi",
  "EQ"
 ],
 "identity": "EQ",
 "converse": {
  "DC": "DC",
  "EC": "EC",
  "PO": "PO",
  "TPP": "TPPi",
  "NTPP": "NTPPi",
  "TPPi": "TPP",
  "NTPPi": "NTPP",
  "EQ": "EQ"
 },
 "composition": {
  "DC,DC": [
   "DC",
   "EC",
   "PO",
   "TPP",
   "NTPP",
   "TPPi",
   "NTPPi",
   "EQ"
  ],
  "DC,EC": [
   "DC",
   "EC",
   "PO",
   "TPP",
   "NTPP"
  ],
  "DC,PO": [
   "DC",
   "EC",
   "PO",
   "TPP",
   "NTPP"
  ],
  "DC,TPP": [
   "DC",
   "EC",
   "PO",
   "TPP",
   "NTPP"
  ],
  "DC,NTPP": [
   "DC",
   "EC",
   "PO",
   "TPP",
   "NTPP"
  ],
  "DC,TPPi": [
   "DC"
  ],
  "DC,NTPPi": [
   "DC"
  ],
  "DC,EQ": [
   "DC"
  ],
  "EC,DC": [
   "DC",
   "EC",
   "PO",
   "TPPi",
   "NTPPi"
  ],
  "EC,EC": [
   "DC",
   "EC",
   "PO",
   "TPP",
   "TPPi",
   "EQ"
  ],
  "EC,PO": [
   "DC",
   "EC",
   "PO",
   "TPP",
   "NTPP"
  ],
  "EC,TPP": [
   "EC",
   "PO",
   "TPP",
   "NTPP"
  ],
  "EC,NTPP": [
   "PO",
   "TPP",
   "NTPP"
  ],
  "EC,TPPi": [
   "DC",
   "EC"
  ],
  "EC,NTPPi": [
   "DC"
  ],
  "EC,EQ": [
   "EC"
  ],
  "PO,DC": [
   "DC",
   "EC",
   "PO",
   "TPPi",
   "NTPPi"
  ],
  "PO,EC": [
   "DC",
   "EC",
   "PO",
   "TPPi",
   "NTPPi"
  ],
  "PO,PO": [
   "DC",
   "EC",
   "PO",
   "TPP",
   "NTPP",
   "TPPi",
   "NTPPi",
   "EQ"
  ],
  "PO,TPP": [
   "PO",
   "TPP",
   "NTPP"
  ],
  "PO,NTPP": [
   "PO",
   "TPP",
   "NTPP"
  ],
  "PO,TPPi": [
   "DC",
   "EC",
   "PO",
   "TPPi",
   "NTPPi"
  ],
  "PO,NTPPi": [
   "DC",
   "EC",
   "PO",
   "TPPi",
   "NTPPi"
  ],
  "PO,EQ": [
   "PO"
  ],
  "TPP,DC": [
   "DC"
  ],
  "TPP,EC": [
   "DC",
   "EC"
  ],
  "TPP,PO": [
   "DC",
   "EC",
   "PO",
   "TPP",
   "NTPP"
  ],
  "TPP,TPP": [
   "TPP",
   "NTPP"
  ],
  "TPP,NTPP": [
   "NTPP"
  ],
  "TPP,TPPi": [
   "DC",
   "EC",
   "PO",
   "TPP",
   "TPPi",
   "EQ"
  ],
  "TPP,NTPPi": [
   "DC",
   "EC",
   "PO",
   "TPPi",
   "NTPPi"
  ],
  "TPP,EQ": [
   "TPP"
  ],
  "NTPP,DC": [
   "DC"
  ],
  "NTPP,EC": [
   "DC"
  ],
  "NTPP,PO": [
   "DC",
   "EC",
   "PO",
   "TPP",
   "NTPP"
  ],
  "NTPP,TPP": [
   "NTPP"
  ],
  "NTPP,NTPP": [
   "NTPP"
  ],
  "NTPP,TPPi": [
   "DC",
   "EC",
   "PO",
   "TPP",
   "NTPP"
  ],
  "NTPP,NTPPi": [
   "DC",
   "EC",
   "PO",
   "TPP",
   "NTPP",
   "TPPi",
   "NTPPi",
   "EQ"
  ],
  "NTPP,EQ": [
   "NTPP"
  ],
  "TPPi,DC": [
   "DC",
   "EC",
   "PO",
   "TPPi",
   "NTPPi"
  ],
  "TPPi,EC": [
   "EC",
   "PO",
   "TPPi",
   "NTPPi"
  ],
  "TPPi,PO": [
   "PO",
   "TPPi",
   "NTPPi"
  ],
  "TPPi,TPP": [
   "PO",
   "TPP",
   "TPPi",
   "EQ"
  ],
  "TPPi,NTPP": [
   "PO",
   "TPP",
   "NTPP"
  ],
  "TPPi,TPPi": [
   "TPPi",
   "NTPPi"
  ],
  "TPPi,NTPPi": [
   "NTPPi"
  ],
  "TPPi,EQ": [
   "TPPi"
  ],
  "NTPPi,DC": [
   "DC",
   "EC",
   "PO",
   "TPPi",
   "NTPPi"
  ],
  "NTPPi,EC": [
   "PO",
   "TPPi",
   "NTPPi"
  ],
  "NTPPi,PO": [
   "PO",
   "TPPi",
   "NTPPi"
  ],
  "NTPPi,TPP": [
   "PO",
   "TPPi",
   "NTPPi"
  ],
  "NTPPi,NTPP": [
   "PO",
   "TPP",
   "NTPP",
   "TPPi",
   "NTPPi",
   "EQ"
  ],
  "NTPPi,TPPi": [
   "NTPPi"
  ],
  "NTPPi,NTPPi": [
   "NTPPi"
  ],
  "NTPPi,EQ": [
   "NTPPi"
  ],
  "EQ,DC": [
   "DC"
  ],
  "EQ,EC": [
   "EC"
  ],
  "EQ,PO": [
   "PO"
  ],
  "EQ,TPP": [
   "TPP"
  ],
  "EQ,NTPP": [
   "NTPP"
  ],
  "EQ,TPPi": [
   "TPPi"
  ],
  "EQ,NTPPi": [
   "NTPPi"
  ],
  "EQ,EQ": [
   "EQ"
  ]
 }
}
)json";

const char* const kCda = R"json(
{
 "name": "cda",
 "arity": 2,
 "atoms": [
  "N",
  "NE",
  "E",
  "SE",
  "S",
  "SW",
  "W",
  "NW",
  "EQ"
 ],
 "identity": "EQ",
 "converse": {
  "N": "S",
  "NE": "SW",
  "E": "W",
  "SE": "NW",
  "S": "N",
  "SW": "NE",
  "W": "E",
  "NW": "SE",
  "EQ": "EQ"
 },
 "composition": {
  "N,N": [
   "N"
  ],
  "N,NE": [
   "NE"
  ],
  "N,E": [
   "NE"
  ],
  "N,SE": [
   "NE",
   "E",
   "SE"
  ],
  "N,S": [
   "N",
   "S",
   "EQ"
  ],
  "N,SW": [
   "SW",
   "W",
   "NW"
  ],
  "N,W": [
   "NW"
  ],
  "N,NW": [
   "NW"
  ],
  "N,EQ": [
   "N"
  ],
  "NE,N": [
   "NE"
  ],
  "NE,NE": [
   "NE"
  ],
  "NE,E": [
   "NE"
  ],
  "NE,SE": [
   "NE",
   "E",
   "SE"
  ],
  "NE,S": [
   "NE",
   "E",
   "SE"
  ],
  "NE,SW": [
   "N",
   "NE",
   "E",
   "SE",
   "S",
   "SW",
   "W",
   "NW",
   "EQ"
  ],
  "NE,W": [
   "N",
   "NE",
   "NW"
  ],
  "NE,NW": [
   "N",
   "NE",
   "NW"
  ],
  "NE,EQ": [
   "NE"
  ],
  "E,N": [
   "NE"
  ],
  "E,NE": [
   "NE"
  ],
  "E,E": [
   "E"
  ],
  "E,SE": [
   "SE"
  ],
  "E,S": [
   "SE"
  ],
  "E,SW": [
   "SE",
   "S",
   "SW"
  ],
  "E,W": [
   "E",
   "W",
   "EQ"
  ],
  "E,NW": [
   "N",
   "NE",
   "NW"
  ],
  "E,EQ": [
   "E"
  ],
  "SE,N": [
   "NE",
   "E",
   "SE"
  ],
  "SE,NE": [
   "NE",
   "E",
   "SE"
  ],
  "SE,E": [
   "SE"
  ],
  "SE,SE": [
   "SE"
  ],
  "SE,S": [
   "SE"
  ],
  "SE,SW": [
   "SE",
   "S",
   "SW"
  ],
  "SE,W": [
   "SE",
   "S",
   "SW"
  ],
  "SE,NW": [
   "N",
   "NE",
   "E",
   "SE",
   "S",
   "SW",
   "W",
   "NW",
   "EQ"
  ],
  "SE,EQ": [
   "SE"
  ],
  "S,N": [
   "N",
   "S",
   "EQ"
  ],
  "S,NE": [
   "NE",
   "E",
   "SE"
  ],
  "S,E": [
   "SE"
  ],
  "S,SE": [
   "SE"
  ],
  "S,S": [
   "S"
  ],
  "S,SW": [
   "SW"
  ],
  "S,W": [
   "SW"
  ],
  "S,NW": [
   "SW",
   "W",
   "NW"
  ],
  "S,EQ": [
   "S"
  ],
  "SW,N": [
   "SW",
   "W",
   "NW"
  ],
  "SW,NE": [
   "N",
   "NE",
   "E",
   "SE",
   "S",
   "SW",
   "W",
   "NW",
   "EQ"
  ],
  "SW,E": [
   "SE",
   "S",
   "SW"
  ],
  "SW,SE": [
   "SE",
   "S",
   "SW"
  ],
  "SW,S": [
   "SW"
  ],
  "SW,SW": [
   "SW"
  ],
  "SW,W": [
   "SW"
  ],
  "SW,NW": [
   "SW",
   "W",
   "NW"
  ],
  "SW,EQ": [
   "SW"
  ],
  "W,N": [
   "NW"
  ],
  "W,NE": [
   "N",
   "NE",
   "NW"
  ],
  "W,E": [
   "E",
   "W",
   "EQ"
  ],
  "W,SE": [
   "SE",
   "S",
   "SW"
  ],
  "W,S": [
   "SW"
  ],
  "W,SW": [
   "SW"
  ],
  "W,W": [
   "W"
  ],
  "W,NW": [
   "NW"
  ],
  "W,EQ": [
   "W"
  ],
  "NW,N": [
   "NW"
  ],
  "NW,NE": [
   "N",
   "NE",
   "NW"
  ],
  "NW,E": [
   "N",
   "NE",
   "NW"
  ],
  "NW,SE": [
   "N",
   "NE",
   "E",
   "SE",
   "S",
   "SW",
   "W",
   "NW",
   "EQ"
  ],
  "NW,S": [
   "SW",
   "W",
   "NW"
  ],
  "NW,SW": [
   "SW",
   "W",
   "NW"
  ],
  "NW,W": [
   "NW"
  ],
  "NW,NW": [
   "NW"
  ],
  "NW,EQ": [
   "NW"
  ],
  "EQ,N": [
   "N"
  ],
  "EQ,NE": [
   "NE"
  ],
  "EQ,E": [
   "E"
  ],
  "EQ,SE": [
   "SE"
  ],
  "EQ,S": [
   "S"
  ],
  "EQ,SW": [
   "SW"
  ],
  "EQ,W": [
   "W"
  ],
  "EQ,NW": [
   "NW"
  ],
  "EQ,EQ": [
   "EQ"
  ]
 }
}
)json";

}  // namespace

const char* builtin_algebra_json(const std::string& name) {
  if (name == "rcc8") return kRcc8;
  if (name == "cda") return kCda;
  return nullptr;
}

}  // namespace stal::detail
