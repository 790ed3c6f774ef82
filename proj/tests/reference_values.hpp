// Frozen reference values for the fixed benchmark datasets. Computed once
// with an independent 25-digit arbitrary-precision evaluation of the same
// closed forms and truncated to double precision.
#ifndef ELLBENCH_TESTS_REFERENCE_VALUES_HPP
#define ELLBENCH_TESTS_REFERENCE_VALUES_HPP

namespace refs {

inline constexpr double rect_u_0_325 = 1.0791562500000000000000;
inline constexpr double rect_u_0_65 = 1.1421250000000000000000;
inline constexpr double rect_p_0_65 = 0.4307871614583333333333;
inline constexpr double rect_A = 0.8640666666666666666666;
inline constexpr double rect_ua_0_65_at_50 = 1.1567250000000000000000;
inline constexpr double rect_pa_0_65_at_50 = 0.4577008447916666666666;
inline constexpr double rect_Aal_at_50 = 0.8830466666666666666666;
inline constexpr double rect_C1a_at_7_3 = 0.2146864149606762595200;
inline constexpr double rect_C2a_at_7_3 = 0.4498111076196154938017;
inline constexpr double rect_C3a_at_7_3 = 1.0000000000000000000000;
inline constexpr double rect_C4a_at_7_3 = -0.614497522580291753321;
inline constexpr double rect_C5a_at_7_3 = 0.8774148226203020723568;
inline constexpr double rect_C6a_at_7_3 = -1.210748155953635405690;
inline constexpr double rect_halfmisfit_dir = 0.2612687805000000000000;
inline constexpr double rect_halfmisfit_rob_at_50 = 0.2727473151000000000000;
inline constexpr double rect_gop_dir = 0.0302379477623593341730;
inline constexpr double rect_J1_dir = 0.0408694120466503705978;
inline constexpr double rect_qop_dir = 0.5877876569037656903765;
inline constexpr double rect_J2_dir = 0.4934363685213781380753;
inline constexpr double rect_bop_dir = 0.1456825396825396825396;
inline constexpr double rect_J3_dir = 0.0151686652619047619047;
inline constexpr double rect_gq_g_dir = -0.105456192703394205059;
inline constexpr double rect_gq_q_dir = 0.2511645578339300399887;
inline constexpr double rect_J4_dir = 0.0811207942891222710085;
inline constexpr double rect_gop_rob_at_50 = 0.0349484582748017215160;
inline constexpr double rect_J1_rob_at_50 = 0.0399954849164370116785;
inline constexpr double rect_qop_rob_at_50 = 0.6059212119372281230580;
inline constexpr double rect_J2_rob_at_50 = 0.5078626807796878236630;
inline constexpr double rect_bop_rob_at_50 = 0.1366444444444444444444;
inline constexpr double rect_J3_rob_at_50 = 0.0136847546333333333333;
inline constexpr double rect_gq_g_rob_at_50 = -0.107230629879321268580;
inline constexpr double rect_gq_q_rob_at_50 = 0.2507045235278060193998;
inline constexpr double rect_J4_rob_at_50 = 0.0786337650230408150702;
inline constexpr double rect_lim_ctrl_g_true = 0.2276247534202728177000;
inline constexpr double rect_lim_ctrl_g_printed = 0.4845607441827910207681;
inline constexpr double rect_lim_K1 = 0.7896157293266136551931;
inline constexpr double rect_lim_L1_true = 1.3937176232078002966303;
inline constexpr double rect_lim_L1_printed = 2.1885522185316940707597;
inline constexpr double rect_lim_ctrl_q = 0.9117094014003834727652;
inline constexpr double rect_lim_ctrl_b = 0.4519047619047619047619;
inline constexpr double rect_lim_ctrl_gq_g = 0.0945197374529913489059;
inline constexpr double rect_lim_ctrl_gq_q = 0.0166036968765646599456;
inline constexpr double rect_lim_cost_J1_true = 0.0479528172646760205512;
inline constexpr double rect_lim_cost_J1_printed = 0.0649467080628534370502;
inline constexpr double rect_lim_cost_J2 = 0.7268271355490017900596;
inline constexpr double rect_lim_cost_J3 = 0.0765707428571428571428;
inline constexpr double rect_lim_cost_J4_true = 0.1259830623120499767142;
inline constexpr double rect_lim_cost_J4_printed = 0.1298752579534656686381;
inline constexpr double annu_u_mid = 0.9178016582376611068367;
inline constexpr double annu_p_mid = 0.2833310350072246663647;
inline constexpr double annu_D1 = 0.7560798805918070333733;
inline constexpr double annu_D2 = -0.003760000000000000000;
inline constexpr double annu_ua_mid_at_50 = 0.9253891582376611068367;
inline constexpr double annu_pa_mid_at_50 = 0.3053557755219382218098;
inline constexpr double annu_D1a_at_50 = 0.7697753180918070333733;
inline constexpr double annu_D2a_at_50 = 0.0145556829522951758343;
inline constexpr double annu_E1 = 2.4672487013183304597973;
inline constexpr double annu_E1a_at_7_3 = 4.6312664103237411486585;
inline constexpr double annu_E2 = 4.6862819144117133397698;
inline constexpr double annu_E2a_at_7_3 = 7.5414884942492371641941;
inline constexpr double annu_E3 = 2.3203125000000000000000;
inline constexpr double annu_E3a_at_7_3 = 2.3203125000000000000000;
inline constexpr double annu_E4 = -6.765996246072818218306;
inline constexpr double annu_E4a_at_7_3 = -11.77047943095156371328;
inline constexpr double annu_E5 = 4.5247291321645250467708;
inline constexpr double annu_E5a_at_7_3 = 6.3685134121837887454010;
inline constexpr double annu_E6 = -6.077182468204336881491;
inline constexpr double annu_E6a_at_7_3 = -7.964422943375569758203;
inline constexpr double annu_halfmisfit_dir = 0.9976115288831464573145;
inline constexpr double annu_halfmisfit_rob_at_50 = 1.0299549474097941126142;
inline constexpr double annu_gop_dir = 0.1576414778859358319751;
inline constexpr double annu_gop_rob_at_50 = 0.1743592985803597882958;
inline constexpr double annu_qop_dir = 0.4981353608454978692856;
inline constexpr double annu_qop_rob_at_50 = 0.5161154596463974059880;
inline constexpr double annu_bop_dir = 0.3123294679567966901772;
inline constexpr double annu_bop_rob_at_50 = 0.3070271444273849254713;
inline constexpr double annu_J1_dir = 0.5450298829241816729682;
inline constexpr double annu_J1_rob_at_50 = 0.5812344815286518435503;
inline constexpr double annu_J2_dir = 3.7016290440377493627077;
inline constexpr double annu_J2_rob_at_50 = 3.8052812679544896814667;
inline constexpr double annu_J3_dir = 0.3206520639218314712555;
inline constexpr double annu_J3_rob_at_50 = 0.3112034233351516911401;
inline constexpr double annu_J4_dir = 0.5212732346010260085765;
inline constexpr double annu_J4_rob_at_50 = 0.4941533731726219752284;
inline constexpr double annu_gq_g_dir = -0.096539839991685124356;
inline constexpr double annu_gq_q_dir = 0.2064504633698015769037;
inline constexpr double annu_gq_g_rob_at_50 = -0.097177651983020174990;
inline constexpr double annu_gq_q_rob_at_50 = 0.2044545403861909197391;
inline constexpr double annu_lim_K2 = 1.1588357092625544657756;
inline constexpr double annu_lim_L2 = 3.3014414705030081010917;
inline constexpr double annu_lim_ctrl_g = 0.8276732904178669585610;
inline constexpr double annu_lim_ctrl_q = 0.9177864773362387616080;
inline constexpr double annu_lim_ctrl_b = 0.2651161764705882352941;
inline constexpr double annu_lim_ctrl_gq_g = 0.0400110391600380036328;
inline constexpr double annu_lim_ctrl_gq_q = 0.0916503558189287117380;
inline constexpr double annu_lim_cost_J1 = 1.7253155767844528047454;
inline constexpr double annu_lim_cost_J2 = 5.3250777296991307241011;
inline constexpr double annu_lim_cost_J3 = 0.4764765287630699963768;
inline constexpr double annu_lim_cost_J4 = 1.3960154451967015919605;
inline constexpr double annu_norm_ua_u_at_100 = 0.0115883570926255446577;
inline constexpr double annu_norm_pa_p_at_100 = 0.0332289152233450650044;
inline constexpr double shel_u_mid = 0.5851886645962732919254;
inline constexpr double shel_p_mid = 0.0507316303100044365572;
inline constexpr double shel_F1 = -0.226313752380952380952;
inline constexpr double shel_F2 = 0.4369719438775510204081;
inline constexpr double shel_ua_mid_at_50 = 0.5682131543921916592724;
inline constexpr double shel_pa_mid_at_50 = 0.0450331392057543958133;
inline constexpr double shel_F1a_at_50 = -0.203136522448979591836;
inline constexpr double shel_F2a_at_50 = 0.4073776544148271553519;
inline constexpr double shel_G1 = 6.4023783053643754819736;
inline constexpr double shel_G1a_at_7_3 = 14.929138368192287868119;
inline constexpr double shel_G2 = 0.7084548104956268221574;
inline constexpr double shel_G2a_at_7_3 = 1.4489077553414213664536;
inline constexpr double shel_G3 = 3.6472303206997084548104;
inline constexpr double shel_G3a_at_7_3 = 3.6472303206997084548104;
inline constexpr double shel_G4 = -4.250419043085789084480;
inline constexpr double shel_G4a_at_7_3 = -9.288894137688251422331;
inline constexpr double shel_G5 = 9.3433416348630247600914;
inline constexpr double shel_G5a_at_7_3 = 14.549716982115979039379;
inline constexpr double shel_G6 = -3.069970845481049562682;
inline constexpr double shel_G6a_at_7_3 = -4.497458250842970680024;
inline constexpr double shel_halfmisfit_dir = 0.2981239047953705088168;
inline constexpr double shel_halfmisfit_rob_at_50 = 0.2702372973703242265954;
inline constexpr double shel_gop_dir = 0.3156415733507669226041;
inline constexpr double shel_gop_rob_at_50 = 0.3574739653713890748774;
inline constexpr double shel_qop_dir = 0.3955857068419058118303;
inline constexpr double shel_qop_rob_at_50 = 0.4120177756419945132833;
inline constexpr double shel_bop_dir = 0.5992425528214937831492;
inline constexpr double shel_bop_rob_at_50 = 0.6121679108648937359484;
inline constexpr double shel_J1_dir = 2.4676003210854548792736;
inline constexpr double shel_J1_rob_at_50 = 2.8141032983230777181041;
inline constexpr double shel_J2_dir = 5.4359526810687698438575;
inline constexpr double shel_J2_rob_at_50 = 5.5622838202490848305011;
inline constexpr double shel_J3_dir = 1.3593687688126454313336;
inline constexpr double shel_J3_rob_at_50 = 1.4100188437204677505355;
inline constexpr double shel_J4_dir = 0.7338405827654497697151;
inline constexpr double shel_J4_rob_at_50 = 0.6726071611931984233814;
inline constexpr double shel_gq_g_dir = -0.084708404399059123951;
inline constexpr double shel_gq_q_dir = 0.1689968307455326357253;
inline constexpr double shel_gq_g_rob_at_50 = -0.084092932966025727158;
inline constexpr double shel_gq_q_rob_at_50 = 0.1653552067453505718228;
inline constexpr double shel_lim_K3 = 3.3653204701805400857729;
inline constexpr double shel_lim_L3 = 1.1180201930106353337038;
inline constexpr double shel_lim_ctrl_g = 2.0870232307929993813026;
inline constexpr double shel_lim_ctrl_q = 0.8619724883980079398554;
inline constexpr double shel_lim_ctrl_b = 0.6462679021699976399567;
inline constexpr double shel_lim_ctrl_gq_g = 0.0204289646642895636176;
inline constexpr double shel_lim_ctrl_gq_q = 0.1724304528439571554665;
inline constexpr double shel_lim_cost_J1_true = 17.001814583451583757487;
inline constexpr double shel_lim_cost_J2 = 6.7799478918659196082551;
inline constexpr double shel_lim_cost_J3_true = 2.5054827490924529096646;
inline constexpr double shel_lim_cost_J4 = 3.2265149338093781514708;
inline constexpr double shel_lim_cost_J1_printed = 13.511458129593856981917;
inline constexpr double shel_lim_cost_J3_printed = 43.488295393447104730430;
inline constexpr double shel_norm_ua_u_at_100 = 0.0336532047018054008577;
inline constexpr double shel_norm_pa_p_at_100 = 0.0119321868892746620032;
inline constexpr double rect_norm_ua_u_at_100 = 0.0078961572932661365519;
inline constexpr double rect_norm_pa_p_at_100 = 0.0140387829263686529871;

} // namespace refs

#endif
