#pragma once

// Monomial tables for the closed-form polynomial identities used by the
// dihedral and strata modules. Generated from the exact reference
// computation; do not edit by hand.

namespace g3hyp::detail {

struct Monomial3 {
    int e1, e2, e3;
    long long num, den;
};

struct Monomial2 {
    int e1, e2;
    long long num, den;
};

inline constexpr Monomial3 kDeltaTable[] = {
    {0, 0, 2, -256LL, 1LL},
    {0, 0, 3, 27LL, 1LL},
    {0, 1, 2, -144LL, 1LL},
    {0, 2, 1, 128LL, 1LL},
    {0, 3, 1, 4LL, 1LL},
    {0, 4, 0, -16LL, 1LL},
    {1, 0, 2, 192LL, 1LL},
    {1, 1, 2, -18LL, 1LL},
    {1, 2, 1, 80LL, 1LL},
    {2, 0, 1, -1024LL, 1LL},
    {2, 0, 2, 114LL, 1LL},
    {2, 1, 1, -576LL, 1LL},
    {2, 2, 0, 256LL, 1LL},
    {2, 2, 1, -1LL, 1LL},
    {2, 3, 0, 8LL, 1LL},
    {3, 0, 1, 768LL, 1LL},
    {3, 0, 2, 4LL, 1LL},
    {3, 1, 1, -72LL, 1LL},
    {3, 2, 0, 160LL, 1LL},
    {4, 0, 0, -1024LL, 1LL},
    {4, 0, 1, 132LL, 1LL},
    {4, 1, 0, -576LL, 1LL},
    {4, 2, 0, -2LL, 1LL},
    {5, 0, 0, 768LL, 1LL},
    {5, 0, 1, 16LL, 1LL},
    {5, 1, 0, -72LL, 1LL},
    {6, 0, 0, 24LL, 1LL},
    {7, 0, 0, 16LL, 1LL},
};

inline constexpr Monomial3 kJ2Table[] = {
    {0, 0, 1, 280LL, 1LL},
    {0, 2, 0, 2LL, 1LL},
    {1, 0, 1, 10LL, 1LL},
    {2, 0, 0, 560LL, 1LL},
    {3, 0, 0, 20LL, 1LL},
};

inline constexpr Monomial3 kJ3Table[] = {
    {0, 0, 2, 1050LL, 1LL},
    {0, 1, 1, 3920LL, 1LL},
    {0, 3, 0, 12LL, 1LL},
    {1, 1, 1, -110LL, 1LL},
    {2, 0, 1, 4200LL, 1LL},
    {2, 1, 0, 7840LL, 1LL},
    {3, 1, 0, -220LL, 1LL},
    {4, 0, 0, 4200LL, 1LL},
};

inline constexpr Monomial3 kJ4Table[] = {
    {0, 0, 2, 2458624LL, 1LL},
    {0, 1, 2, 8064LL, 1LL},
    {0, 2, 1, -25088LL, 1LL},
    {0, 4, 0, 64LL, 1LL},
    {1, 0, 2, -12544LL, 1LL},
    {1, 2, 1, 1984LL, 1LL},
    {2, 0, 1, 9834496LL, 1LL},
    {2, 0, 2, 256LL, 1LL},
    {2, 1, 1, 32256LL, 1LL},
    {2, 2, 0, -50176LL, 1LL},
    {3, 0, 1, -50176LL, 1LL},
    {3, 2, 0, 3968LL, 1LL},
    {4, 0, 0, 9834496LL, 1LL},
    {4, 0, 1, 1024LL, 1LL},
    {4, 1, 0, 32256LL, 1LL},
    {5, 0, 0, -50176LL, 1LL},
    {6, 0, 0, 1024LL, 1LL},
};

inline constexpr Monomial3 kJ5Table[] = {
    {0, 0, 3, 658560LL, 1LL},
    {0, 1, 2, 2458624LL, 1LL},
    {0, 2, 2, 9184LL, 1LL},
    {0, 3, 1, -25088LL, 1LL},
    {0, 5, 0, 64LL, 1LL},
    {1, 0, 3, -4480LL, 1LL},
    {1, 1, 2, 332416LL, 1LL},
    {1, 3, 1, -416LL, 1LL},
    {2, 0, 2, 3951360LL, 1LL},
    {2, 1, 1, 9834496LL, 1LL},
    {2, 1, 2, -1664LL, 1LL},
    {2, 2, 1, 36736LL, 1LL},
    {2, 3, 0, -50176LL, 1LL},
    {3, 0, 2, -26880LL, 1LL},
    {3, 1, 1, 1329664LL, 1LL},
    {3, 3, 0, -832LL, 1LL},
    {4, 0, 1, 7902720LL, 1LL},
    {4, 1, 0, 9834496LL, 1LL},
    {4, 1, 1, -6656LL, 1LL},
    {4, 2, 0, 36736LL, 1LL},
    {5, 0, 1, -53760LL, 1LL},
    {5, 1, 0, 1329664LL, 1LL},
    {6, 0, 0, 5268480LL, 1LL},
    {6, 1, 0, -6656LL, 1LL},
    {7, 0, 0, -35840LL, 1LL},
};

inline constexpr Monomial3 kJ6Table[] = {
    {0, 0, 3, -3855122432LL, 1LL},
    {0, 1, 3, 37933056LL, 1LL},
    {0, 2, 2, 59006976LL, 1LL},
    {0, 3, 2, -193536LL, 1LL},
    {0, 4, 1, -301056LL, 1LL},
    {0, 6, 0, 512LL, 1LL},
    {1, 0, 3, 295034880LL, 1LL},
    {1, 1, 3, -387072LL, 1LL},
    {1, 2, 2, 6021120LL, 1LL},
    {1, 4, 1, -38400LL, 1LL},
    {2, 0, 2, -23130734592LL, 1LL},
    {2, 0, 3, -3010560LL, 1LL},
    {2, 1, 2, 227598336LL, 1LL},
    {2, 2, 1, 236027904LL, 1LL},
    {2, 2, 2, -76800LL, 1LL},
    {2, 3, 1, -774144LL, 1LL},
    {2, 4, 0, -602112LL, 1LL},
    {3, 0, 2, 1770209280LL, 1LL},
    {3, 0, 3, 4096LL, 1LL},
    {3, 1, 2, -2322432LL, 1LL},
    {3, 2, 1, 24084480LL, 1LL},
    {3, 4, 0, -76800LL, 1LL},
    {4, 0, 1, -46261469184LL, 1LL},
    {4, 0, 2, -18063360LL, 1LL},
    {4, 1, 1, 455196672LL, 1LL},
    {4, 2, 0, 236027904LL, 1LL},
    {4, 2, 1, -307200LL, 1LL},
    {4, 3, 0, -774144LL, 1LL},
    {5, 0, 1, 3540418560LL, 1LL},
    {5, 0, 2, 24576LL, 1LL},
    {5, 1, 1, -4644864LL, 1LL},
    {5, 2, 0, 24084480LL, 1LL},
    {6, 0, 0, -30840979456LL, 1LL},
    {6, 0, 1, -36126720LL, 1LL},
    {6, 1, 0, 303464448LL, 1LL},
    {6, 2, 0, -307200LL, 1LL},
    {7, 0, 0, 2360279040LL, 1LL},
    {7, 0, 1, 49152LL, 1LL},
    {7, 1, 0, -3096576LL, 1LL},
    {8, 0, 0, -24084480LL, 1LL},
    {9, 0, 0, 32768LL, 1LL},
};

inline constexpr Monomial3 kJ7Table[] = {
    {0, 0, 4, 1032622080LL, 1LL},
    {0, 1, 3, -3855122432LL, 1LL},
    {0, 1, 4, 1128960LL, 1LL},
    {0, 2, 3, 41445376LL, 1LL},
    {0, 3, 2, 59006976LL, 1LL},
    {0, 4, 2, -238336LL, 1LL},
    {0, 5, 1, -301056LL, 1LL},
    {0, 7, 0, 512LL, 1LL},
    {1, 0, 4, -8780800LL, 1LL},
    {1, 1, 3, 934277120LL, 1LL},
    {1, 2, 3, 267008LL, 1LL},
    {1, 3, 2, -2508800LL, 1LL},
    {1, 5, 1, -11520LL, 1LL},
    {2, 0, 3, 8260976640LL, 1LL},
    {2, 0, 4, 35840LL, 1LL},
    {2, 1, 2, -23130734592LL, 1LL},
    {2, 1, 3, 250880LL, 1LL},
    {2, 2, 2, 248672256LL, 1LL},
    {2, 3, 1, 236027904LL, 1LL},
    {2, 3, 2, 88320LL, 1LL},
    {2, 4, 1, -953344LL, 1LL},
    {2, 5, 0, -602112LL, 1LL},
    {3, 0, 3, -70246400LL, 1LL},
    {3, 1, 2, 5605662720LL, 1LL},
    {3, 1, 3, 19456LL, 1LL},
    {3, 2, 2, 1602048LL, 1LL},
    {3, 3, 1, -10035200LL, 1LL},
    {3, 5, 0, -23040LL, 1LL},
    {4, 0, 2, 24782929920LL, 1LL},
    {4, 0, 3, 286720LL, 1LL},
    {4, 1, 1, -46261469184LL, 1LL},
    {4, 1, 2, -25589760LL, 1LL},
    {4, 2, 1, 497344512LL, 1LL},
    {4, 3, 0, 236027904LL, 1LL},
    {4, 3, 1, 353280LL, 1LL},
    {4, 4, 0, -953344LL, 1LL},
    {5, 0, 2, -210739200LL, 1LL},
    {5, 1, 1, 11211325440LL, 1LL},
    {5, 1, 2, 116736LL, 1LL},
    {5, 2, 1, 3204096LL, 1LL},
    {5, 3, 0, -10035200LL, 1LL},
    {6, 0, 1, 33043906560LL, 1LL},
    {6, 0, 2, 860160LL, 1LL},
    {6, 1, 0, -30840979456LL, 1LL},
    {6, 1, 1, -69242880LL, 1LL},
    {6, 2, 0, 331563008LL, 1LL},
    {6, 3, 0, 353280LL, 1LL},
    {7, 0, 1, -280985600LL, 1LL},
    {7, 1, 0, 7474216960LL, 1LL},
    {7, 1, 1, 233472LL, 1LL},
    {7, 2, 0, 2136064LL, 1LL},
    {8, 0, 0, 16521953280LL, 1LL},
    {8, 0, 1, 1146880LL, 1LL},
    {8, 1, 0, -52183040LL, 1LL},
    {9, 0, 0, -140492800LL, 1LL},
    {9, 1, 0, 155648LL, 1LL},
    {10, 0, 0, 573440LL, 1LL},
};

inline constexpr Monomial3 kJNumerMTable[] = {
    {0, 0, 2, -2048LL, 1LL},
    {0, 0, 3, 216LL, 1LL},
    {0, 1, 2, -1152LL, 1LL},
    {0, 2, 1, 1024LL, 1LL},
    {0, 3, 1, 32LL, 1LL},
    {0, 4, 0, -128LL, 1LL},
    {1, 0, 2, 768LL, 1LL},
    {1, 1, 2, -72LL, 1LL},
    {1, 2, 1, 320LL, 1LL},
    {2, 0, 1, -2048LL, 1LL},
    {2, 0, 2, 228LL, 1LL},
    {2, 1, 1, -1152LL, 1LL},
    {2, 2, 0, 512LL, 1LL},
    {2, 2, 1, -2LL, 1LL},
    {2, 3, 0, 16LL, 1LL},
    {3, 0, 1, 768LL, 1LL},
    {3, 0, 2, 4LL, 1LL},
    {3, 1, 1, -72LL, 1LL},
    {3, 2, 0, 160LL, 1LL},
    {4, 0, 0, -512LL, 1LL},
    {4, 0, 1, 66LL, 1LL},
    {4, 1, 0, -288LL, 1LL},
    {4, 2, 0, -1LL, 1LL},
    {5, 0, 0, 192LL, 1LL},
    {5, 0, 1, 4LL, 1LL},
    {5, 1, 0, -18LL, 1LL},
    {6, 0, 0, 3LL, 1LL},
    {7, 0, 0, 1LL, 1LL},
};

inline constexpr Monomial3 kJNumerPTable[] = {
    {0, 0, 1, -48LL, 1LL},
    {0, 2, 0, -4LL, 1LL},
    {1, 0, 1, 6LL, 1LL},
    {2, 0, 0, -24LL, 1LL},
    {3, 0, 0, 3LL, 1LL},
};

inline constexpr Monomial3 kG2DTable[] = {
    {0, 0, 2, -10LL, 1LL},
    {0, 0, 3, 2LL, 1LL},
    {0, 2, 0, -3LL, 1LL},
    {1, 0, 0, -20LL, 1LL},
    {1, 0, 1, 4LL, 1LL},
};

inline constexpr Monomial3 kG2I1Table[] = {
    {0, 0, 2, -80LL, 1LL},
    {0, 0, 3, 2LL, 1LL},
    {0, 0, 4, 1LL, 1LL},
    {0, 1, 2, -12LL, 1LL},
    {0, 2, 0, -72LL, 1LL},
    {1, 0, 0, -160LL, 1LL},
    {1, 0, 1, 4LL, 1LL},
    {1, 0, 2, -2LL, 1LL},
    {1, 1, 0, -24LL, 1LL},
};

inline constexpr Monomial3 kG2I2Table[] = {
    {0, 0, 2, -2240LL, 1LL},
    {0, 0, 3, 624LL, 1LL},
    {0, 0, 4, 3LL, 1LL},
    {0, 0, 5, 1LL, 1LL},
    {0, 1, 2, -558LL, 1LL},
    {0, 1, 3, -18LL, 1LL},
    {0, 2, 0, 864LL, 1LL},
    {0, 2, 1, 162LL, 1LL},
    {1, 0, 0, -4480LL, 1LL},
    {1, 0, 1, 1248LL, 1LL},
    {1, 0, 2, 114LL, 1LL},
    {1, 0, 3, 2LL, 1LL},
    {1, 1, 0, -1116LL, 1LL},
    {1, 1, 1, -36LL, 1LL},
    {2, 0, 0, 216LL, 1LL},
};

inline constexpr Monomial3 kG2I3Table[] = {
    {0, 0, 4, -512LL, 1LL},
    {0, 0, 5, 192LL, 1LL},
    {0, 0, 6, 3LL, 1LL},
    {0, 0, 7, 1LL, 1LL},
    {0, 1, 4, -288LL, 1LL},
    {0, 1, 5, -18LL, 1LL},
    {0, 2, 2, 512LL, 1LL},
    {0, 2, 3, 160LL, 1LL},
    {0, 2, 4, -1LL, 1LL},
    {0, 3, 2, 16LL, 1LL},
    {0, 4, 0, -128LL, 1LL},
    {1, 0, 2, -2048LL, 1LL},
    {1, 0, 3, 768LL, 1LL},
    {1, 0, 4, 66LL, 1LL},
    {1, 0, 5, 4LL, 1LL},
    {1, 1, 2, -1152LL, 1LL},
    {1, 1, 3, -72LL, 1LL},
    {1, 2, 0, 1024LL, 1LL},
    {1, 2, 1, 320LL, 1LL},
    {1, 2, 2, -2LL, 1LL},
    {1, 3, 0, 32LL, 1LL},
    {2, 0, 0, -2048LL, 1LL},
    {2, 0, 1, 768LL, 1LL},
    {2, 0, 2, 228LL, 1LL},
    {2, 0, 3, 4LL, 1LL},
    {2, 1, 0, -1152LL, 1LL},
    {2, 1, 1, -72LL, 1LL},
    {3, 0, 0, 216LL, 1LL},
};

inline constexpr Monomial2 kZ2Z4Rel1Table[] = {
    {0, 0, -963780608LL, 1LL},
    {0, 1, -81462500LL, 1LL},
    {0, 2, -1953125LL, 1LL},
    {1, 0, 927746400LL, 1LL},
    {1, 1, 36093750LL, 1LL},
    {2, 0, -256055625LL, 1LL},
    {3, 0, 15187500LL, 1LL},
};

inline constexpr Monomial2 kZ2Z4Rel2Table[] = {
    {0, 0, 4628074479616LL, 1LL},
    {0, 1, -22689450000LL, 1LL},
    {0, 2, 52734375LL, 1LL},
    {1, 0, -4593393436800LL, 1LL},
    {1, 1, 5788125000LL, 1LL},
    {2, 0, 1572126780000LL, 1LL},
    {2, 1, 1371093750LL, 1LL},
    {3, 0, -215275375000LL, 1LL},
    {4, 0, 8912109375LL, 1LL},
};

}  // namespace g3hyp::detail
