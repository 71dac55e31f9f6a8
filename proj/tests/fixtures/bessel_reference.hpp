// Reference values computed once with mpmath (40 significant digits).
// Regenerate with tests/fixtures/make_reference.py.
#pragma once

namespace fixtures {

struct BesselKRef { double nu; double x; double value; };

inline constexpr BesselKRef kBesselK[] = {
    {0, 1e-8, 1.8536612259610778e+1},
    {0, 1e-3, 7.0236888005623813},
    {0, 0.05, 3.1142340294719899},
    {0, 0.1, 2.4270690247020166},
    {0, 0.5, 9.2441907122766586e-1},
    {0, 1, 4.2102443824070833e-1},
    {0, 1.9, 1.2884597927604748e-1},
    {0, 2, 1.1389387274953344e-1},
    {0, 2.1, 1.0078374088996695e-1},
    {0, 3.7, 1.5630659921626662e-2},
    {0, 5, 3.6910983340425943e-3},
    {0, 10, 1.7780062316167652e-5},
    {0, 20, 5.7412378153365243e-10},
    {0, 35, 1.3310351491429469e-16},
    {0, 50, 3.4101677497894955e-23},
    {0.1, 1e-8, 3.1377109574976017e+1},
    {0.1, 1e-3, 7.6735905190531844},
    {0.1, 0.05, 3.1867422277141123},
    {0.1, 0.1, 2.4670534102276832},
    {0.1, 0.5, 9.3008652913147854e-1},
    {0.1, 1, 4.2256594495516929e-1},
    {0.1, 1.9, 1.2912526780729538e-1},
    {0.1, 2, 1.1413020353680899e-1},
    {0.1, 2.1, 1.0098431524751702e-1},
    {0.1, 3.7, 1.5649535843829672e-2},
    {0.1, 5, 3.6944832782554555e-3},
    {0.1, 10, 1.7788551507869296e-5},
    {0.1, 20, 5.742639211877089e-10},
    {0.1, 35, 1.3312226741299782e-16},
    {0.1, 50, 3.4105054446047281e-23},
    {0.3, 1e-8, 4.6256360318906636e+2},
    {0.3, 1e-3, 1.4406547529041027e+1},
    {0.3, 0.05, 3.8119663367691108},
    {0.3, 0.1, 2.8050564750215723},
    {0.3, 0.5, 9.7647412438178792e-1},
    {0.3, 1, 4.3507602420880202e-1},
    {0.3, 1.9, 1.3137942527906502e-1},
    {0.3, 2, 1.1603697434811926e-1},
    {0.3, 2.1, 1.0260207043456643e-1},
    {0.3, 3.7, 1.5801315880070935e-2},
    {0.3, 5, 3.7216693288734255e-3},
    {0.3, 10, 1.7856607016823022e-5},
    {0.3, 20, 5.7538625183587375e-10},
    {0.3, 35, 1.3327238168640899e-16},
    {0.3, 50, 3.413208199536853e-23},
    {0.5, 1e-8, 1.2533141247823589e+4},
    {0.5, 1e-3, 3.9593659513116644e+1},
    {0.5, 0.05, 5.3316325691057587},
    {0.5, 0.1, 3.5861668387972601},
    {0.5, 0.5, 1.0750476034999202},
    {0.5, 1, 4.6106850444789456e-1},
    {0.5, 1.9, 1.3599521326566796e-1},
    {0.5, 2, 1.1993777196806145e-1},
    {0.5, 2.1, 1.0590875899695359e-1},
    {0.5, 3.7, 1.6109033825487326e-2},
    {0.5, 5, 3.7766133746428826e-3},
    {0.5, 10, 1.799347809370518e-5},
    {0.5, 20, 5.7763739747074447e-10},
    {0.5, 35, 1.3357311366035825e-16},
    {0.5, 50, 3.4186200954570746e-23},
    {1, 1e-8, 9.9999999999999905e+7},
    {1, 1e-3, 9.9999623815608557e+2},
    {1, 0.05, 1.9909674325882507e+1},
    {1, 0.1, 9.8538447808706061},
    {1, 0.5, 1.6564411200033009},
    {1, 1, 6.0190723019723457e-1},
    {1, 1.9, 1.5966015303266761e-1},
    {1, 2, 1.3986588181652243e-1},
    {1, 2.1, 1.2274641153350791e-1},
    {1, 3.7, 1.7628035102223267e-2},
    {1, 5, 4.0446134454521642e-3},
    {1, 10, 1.8648773453825585e-5},
    {1, 20, 5.8830579695570382e-10},
    {1, 35, 1.3499178340011057e-16},
    {1, 50, 3.4441022267175556e-23},
    {1.5, 1e-8, 1.2533141373155002e+12},
    {1.5, 1e-3, 3.963325317262976e+4},
    {1.5, 0.05, 1.1196428395122093e+2},
    {1.5, 0.1, 3.9447835226769862e+1},
    {1.5, 0.5, 3.2251428104997607},
    {1.5, 1, 9.2213700889578912e-1},
    {1.5, 1.9, 2.0757164130023004e-1},
    {1.5, 2, 1.7990665795209217e-1},
    {1.5, 2.1, 1.563415013764553e-1},
    {1.5, 3.7, 2.0462826751294712e-2},
    {1.5, 5, 4.5319360495714591e-3},
    {1.5, 10, 1.9792825903075698e-5},
    {1.5, 20, 6.0651926734428169e-10},
    {1.5, 35, 1.3738948833636848e-16},
    {1.5, 50, 3.4869924973662161e-23},
    {2, 1e-8, 2.0e+16},
    {2, 1e-3, 1.9999995000009717e+6},
    {2, 0.05, 7.9950120706477225e+2},
    {2, 0.1, 1.9950396464211414e+2},
    {2, 0.5, 7.5501835512408694},
    {2, 1, 1.6248388986351775},
    {2, 1.9, 2.9690929825780286e-1},
    {2, 2, 2.5375975456605586e-1},
    {2, 2.1, 2.1768508520759353e-1},
    {2, 3.7, 2.5159327544450049e-2},
    {2, 5, 5.30894371222346e-3},
    {2, 10, 2.1509817006932769e-5},
    {2, 20, 6.3295436122922281e-10},
    {2, 35, 1.4081733110858672e-16},
    {2, 50, 3.5479318388581977e-23},
    {2.3, 1e-8, 7.2161013431165659e+18},
    {2.3, 1e-3, 2.2819311682520397e+7},
    {2.3, 0.05, 2.8213889614799155e+3},
    {2.3, 0.1, 5.7209686692828982e+2},
    {2.3, 0.5, 1.350965388130364e+1},
    {2.3, 1, 2.4205579369209238},
    {2.3, 1.9, 3.8410450146420695e-1},
    {2.3, 2, 3.2510864704247955e-1},
    {2.3, 2.1, 2.7638911348666841e-1},
    {2.3, 3.7, 2.9253547893152791e-2},
    {2.3, 5, 5.961350317441102e-3},
    {2.3, 10, 2.2867351734005019e-5},
    {2.3, 20, 6.5316420870067573e-10},
    {2.3, 35, 1.433982779774508e-16},
    {2.3, 50, 3.5935292457859582e-23},
    {2.5, 1e-8, 3.7599424119465007e+20},
    {2.5, 1e-3, 1.1889979911154879e+8},
    {2.5, 0.05, 6.7231886696423617e+3},
    {2.5, 0.1, 1.1870212236418931e+3},
    {2.5, 0.5, 2.0425904466498485e+1},
    {2.5, 1, 3.2274795311352619},
    {2.5, 1.9, 4.6373991005550486e-1},
    {2.5, 2, 3.897977588961997e-1},
    {2.5, 2.1, 3.292537609633183e-1},
    {2.5, 3.7, 3.2700514975185742e-2},
    {2.5, 5, 6.495775004385758e-3},
    {2.5, 10, 2.3931325864627889e-5},
    {2.5, 20, 6.6861528757238672e-10},
    {2.5, 35, 1.4534935551776126e-16},
    {2.5, 50, 3.6278396452990476e-23},
    {3, 1e-8, 7.9999999999999999e+24},
    {3, 1e-3, 7.999999000000125e+9},
    {3, 0.05, 6.3980006239507663e+4},
    {3, 0.1, 7.9900124304654362e+3},
    {3, 0.5, 6.2057909529930256e+1},
    {3, 1, 7.1012628247379445},
    {3, 1.9, 7.8473235989119995e-1},
    {3, 2, 6.4738539094863415e-1},
    {3, 2.1, 5.373846690717813e-1},
    {3, 3.7, 4.4827308123250347e-2},
    {3, 5, 8.2917684152309322e-3},
    {3, 10, 2.7252700256598692e-5},
    {3, 20, 7.1489666920154838e-10},
    {3, 35, 1.5108519266966334e-16},
    {3, 50, 3.7279367738262114e-23},
    {4.7, 1e-8, 7.9839285050894569e+39},
    {4.7, 1e-3, 2.5247397046120621e+16},
    {4.7, 0.05, 2.6120666880556545e+8},
    {4.7, 0.1, 1.0044382292193847e+7},
    {4.7, 0.5, 5.1255941837925925e+3},
    {4.7, 1, 1.8759545698872163e+2},
    {4.7, 1.9, 7.7671918700277841},
    {4.7, 2, 5.956529984652712},
    {4.7, 2.1, 4.6170856259222814},
    {4.7, 3.7, 1.8862767767264544e-1},
    {4.7, 5, 2.5624697665719575e-2},
    {4.7, 10, 5.0283043853585201e-5},
    {4.7, 20, 9.8220936824303262e-10},
    {4.7, 35, 1.8161505210117245e-16},
    {4.7, 50, 4.2433192883367249e-23},
    {5.5, 1e-8, 1.1843818597631477e+47},
    {5.5, 1e-3, 3.7453440881630047e+19},
    {5.5, 0.05, 1.6947139552246106e+10},
    {5.5, 0.1, 3.7432642922827007e+8},
    {5.5, 0.5, 5.2861165711694578e+4},
    {5.5, 1, 1.1208575343128317e+3},
    {5.5, 1.9, 2.8544328046800563e+1},
    {5.5, 2, 2.1090307589508805e+1},
    {5.5, 2.1, 1.5783924109888017e+1},
    {5.5, 3.7, 4.4171976776277291e-1},
    {5.5, 5, 5.0509937917823769e-2},
    {5.5, 10, 7.3304530079850216e-5},
    {5.5, 20, 1.1964034801998395e-9},
    {5.5, 35, 2.0366284847396366e-16},
    {5.5, 50, 4.5998019648897317e-23},
    {7.25, 1e-8, 8.7935188626733417e+62},
    {7.25, 1e-3, 4.944958852523701e+26},
    {7.25, 0.05, 2.3800536073832862e+14},
    {7.25, 0.1, 1.563108009084468e+12},
    {7.25, 0.5, 1.3252302679019084e+7},
    {7.25, 1, 8.4499917665712482e+4},
    {7.25, 1.9, 7.2662968117024572e+2},
    {7.25, 2, 4.9342139872860996e+2},
    {7.25, 2.1, 3.4094565854849717e+2},
    {7.25, 3.7, 3.9592139361075324},
    {7.25, 5, 2.9846491422769927e-1},
    {7.25, 10, 2.0189735039251485e-4},
    {7.25, 20, 2.0459213189981409e-9},
    {7.25, 35, 2.7843000147774829e-16},
    {7.25, 50, 5.733791345016649e-23},
    {9.999999, 1e-8, 1.8579059043378827e+88},
    {9.999999, 1e-3, 1.8579272427840986e+38},
    {9.999999, 0.05, 1.9023928775205803e+21},
    {9.999999, 0.1, 1.8574198377651257e+18},
    {9.999999, 0.5, 1.8893688181182583e+11},
    {9.999999, 1, 1.8071275716454032e+8},
    {9.999999, 1.9, 2.742924019104935e+5},
    {9.999999, 2, 1.6248203614586561e+5},
    {9.999999, 2.1, 9.8636161772857641e+4},
    {9.999999, 3.7, 2.6639862383197832e+2},
    {9.999999, 5, 9.7585491280369738},
    {9.999999, 10, 1.6142539166728967e-3},
    {9.999999, 20, 6.31621154979123e-9},
    {9.999999, 35, 5.3976755408666341e-16},
    {9.999999, 50, 9.1509864090282468e-23},
    {10, 1e-8, 1.8579456e+88},
    {10, 1e-3, 1.8579455483904008e+38},
    {10, 0.05, 1.9024041789848064e+21},
    {10, 0.1, 1.857429584630401e+18},
    {10, 0.5, 1.8893756931990026e+11},
    {10, 1, 1.8071328990102945e+8},
    {10, 1.9, 2.7429303661739918e+5},
    {10, 2, 1.6248240397955915e+5},
    {10, 2.1, 9.8636380376510683e+4},
    {10, 3.7, 2.6639907032182534e+2},
    {10, 5, 9.7585628291778101},
    {10, 10, 1.61425530039067e-3},
    {10, 20, 6.3162145283215798e-9},
    {10, 35, 5.3976770429777215e-16},
    {10, 50, 9.1509882099879961e-23},
};

struct GammaRef { double x; double value; };

inline constexpr GammaRef kGamma[] = {
    {1e-6, 9.9999942278532415e+5},
    {0.001, 9.9942377248459547e+2},
    {0.1, 9.5135076986687318},
    {0.5, 1.772453850905516},
    {1, 1.0},
    {1.5, 8.8622692545275801e-1},
    {2.5, 1.329340388179137},
    {3.3, 2.6834373819557688},
    {5, 2.4e+1},
    {7.75, 3.0578226711926072e+3},
    {12.5, 1.3684336546556586e+8},
    {20, 1.21645100408832e+17},
    {33.3, 7.4875775965227066e+35},
    {49.5, 8.6676018431352723e+61},
    {50, 6.0828186403426756e+62},
};

}  // namespace fixtures
