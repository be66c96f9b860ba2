#pragma once

// Reference values computed once with mpmath at 70 significant digits
// (mp.quad / mp.gammainc / mp.expint / mp.laguerre) and truncated to 50.

namespace xop::test::frozen {

inline constexpr const char* kGamma2p5 = "1.3293403881791370204736256125058588870981620920918";
inline constexpr const char* kUpperGammaM1At2 = "1.8767130910245226379759912258192679389323587991765e-2";
inline constexpr const char* kE2At1 = "1.4849550677592204791835999470133921841476383762486e-1";
inline constexpr const char* kE4At6 = "2.57043331031533188273371463237529956915210242257e-4";
inline constexpr const char* kUpperGammaM3At6 = "1.1900154214422832790433864038774535042370844548935e-6";

struct MomentValue {
  const char* alpha;
  int i;
  int j;
  const char* value;
};

inline constexpr MomentValue kMoments[] = {
    {"0.5", 0, 0, "4.2378625137902258440032840568816373921955580728292e-1"},
    {"0.5", 0, 1, "2.7148571714471078254204923766956624396466478856895e-1"},
    {"0.5", 1, 0, "1.3095457930301600674141619520600202058120330996909"},
    {"0.5", 1, 1, "9.045199068086298281312553953100781498796928953897e-1"},
    {"0.5", 1, 2, "8.9690230099840089912523673681801936732130326417469e-1"},
    {"0.5", 2, 1, "3.1125145348693358006039371888619138464508413476867"},
    {"0.5", 3, 3, "3.1904169316299288491367014700140613290355890210203e+1"},
    {"0.5", 8, 8, "2.7046588096850879519792267289969836873796113537029e+10"},
    {"0.5", 0, 8, "1.2123624764722098426459354328975552493325477366303e+2"},
    {"0.5", 8, 0, "8.9142058747422502307556835835084328080946270514231e+3"},
    {"1", 0, 0, "7.5683362326760036282427977607986713666745278761557e-2"},
    {"1", 0, 1, "9.9463589295216139457374578748578363170927178316118e-2"},
    {"1", 1, 0, "3.1352846419221815263937484640930219926409499683716e-1"},
    {"1", 1, 1, "4.4179420589288382945711903496673743415448206907218e-1"},
    {"1", 1, 2, "7.8204771170202823626136336462374648592838512826303e-1"},
    {"1", 2, 1, "2.0316304272051639596946866550108317910956696185464"},
    {"1", 3, 3, "6.4e+1"},
    {"1", 8, 8, "1.44632866048e+11"},
    {"1", 0, 8, "3.3897265009340242732344777397864999194172401723367e+2"},
    {"1", 8, 0, "1.8836615469334258846745736789527420117534023199493e+4"},
    {"3", 0, 0, "1.242367995922777370888180266857282217842142166172e-2"},
    {"3", 0, 1, "5.5082873074093502976117401661854179836430855015866e-2"},
    {"3", 1, 0, "1.0477759291100459781164461233614546855011654166275e-1"},
    {"3", 1, 1, "4.871789794137883845263541649546132421667851571332e-1"},
    {"3", 1, 2, "2.4887683419217237515854102944618689847859588419535"},
    {"3", 2, 1, "4.4374842595768772896908269542803219534530994704863"},
    {"3", 3, 3, "1.536e+3"},
    {"3", 8, 8, "1.04930245435392e+14"},
    {"3", 0, 8, "2.7082014614465858540518478301652553914950137750075e+4"},
    {"3", 8, 0, "7.6652806447277311062142637279526780127865610456889e+5"},
};

// closed-form degree-5 polynomial at alpha = 1.5, evaluated at x
inline constexpr const char* kLhat5Alpha1p5At0p7 = "7.8700066666666666666666666666666666666666666666667";
inline constexpr const char* kLhat5Alpha1p5At3p2 = "-1.2194055833333333333333333333333333333333333333333e+1";

}  // namespace xop::test::frozen
