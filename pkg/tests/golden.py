"""Frozen golden reference values for the decay curves and tables."""

# |lambda| decay curves, keyed (p, c, N) -> list over plot index i = n + 1
LAMBDA_CURVES = {
    (0, 100.0, 0): [
        0.0628318530717959,
        0.0628318530718015,
        0.0628318530718015,
        0.0628318530718015,
        0.0628318530718014,
        0.0628318530718014,
        0.0628318530718014,
        0.0628318530718014,
        0.0628318530718014,
        0.0628318530718013,
        0.0628318530718013,
        0.0628318530718013,
        0.0628318530718013,
        0.0628318530718013,
        0.0628318530718013,
        0.0628318530718014,
        0.0628318530718014,
        0.0628318530718016,
        0.0628318530718038,
        0.0628318530718347,
        0.0628318530721835,
        0.0628318530763155,
        0.0628318531163065,
        0.0628318535135555,
        0.062831856784986,
        0.0628318837883456,
        0.062832069507959,
        0.0628332912291397,
        0.0628390672175515,
        0.0628371419584172,
        0.0621299125389562,
        0.0528621305626974,
        0.025088648119428,
        0.0065130156012386,
        0.0012964289411871,
        0.0002240622618329,
        3.47467497717e-05,
        4.9102308637e-06,
        6.386692394e-07,
        7.70172655e-08,
    ],
    (0, 100.0, 10): [
        0.0628318530717961,
        0.062831853071796,
        0.062831853071796,
        0.062831853071796,
        0.062831853071796,
        0.062831853071796,
        0.062831853071796,
        0.062831853071796,
        0.062831853071796,
        0.062831853071796,
        0.062831853071796,
        0.062831853071796,
        0.062831853071796,
        0.062831853071796,
        0.062831853071796,
        0.062831853071796,
        0.062831853071796,
        0.062831853071796,
        0.0628318530717953,
        0.0628318530717352,
        0.0628318530670969,
        0.0628318527701286,
        0.0628318371571949,
        0.0628311750004416,
        0.06280920875626,
        0.0622799304109514,
        0.0552900987497948,
        0.0292391424776581,
        0.0080840626347923,
        0.0016477806585346,
        0.0002888538323686,
        4.52637547335e-05,
        6.4481694324e-06,
        8.440414491e-07,
        1.02295426e-07,
    ],
    (0, 100.0, 25): [
        0.0628318530717945,
        0.0628318530717944,
        0.0628318530717945,
        0.0628318530717945,
        0.0628318530717945,
        0.0628318530717945,
        0.0628318530717944,
        0.0628318530717944,
        0.0628318530717944,
        0.0628318530717943,
        0.0628318530717944,
        0.0628318530717943,
        0.0628318530717874,
        0.0628318530711371,
        0.0628318530211721,
        0.062831849906884,
        0.0628316945624743,
        0.0628256396051026,
        0.062650378127495,
        0.0594918985377494,
        0.039481764322065,
        0.0129364717231185,
        0.0027759339995982,
        0.000495464225525,
        7.81222467621e-05,
        1.11182241426e-05,
        1.4463785042e-06,
    ],
    (0, 100.0, 50): [
        0.0628318530717951,
        0.0628318530717951,
        0.0628318530717951,
        0.0628318530717926,
        0.0628318530713416,
        0.0628318530131517,
        0.0628318476170156,
        0.0628314860463029,
        0.0628142803202116,
        0.0622731346576304,
        0.0541261099973812,
        0.0256354513698988,
        0.0061038961592428,
        0.0010712927360798,
        0.0001599460266559,
        2.11031731412e-05,
    ],
    (0, 100.0, 80): [
        0.0628280584842117,
        0.0623712127149815,
        0.0508474381705328,
        0.0169193413593417,
        0.002552207158839,
        0.0002821876886859,
        2.60731131772e-05,
    ],
    (1, 50.0, 0): [
        0.0445466239746536,
        0.0445466239746537,
        0.0445466239746537,
        0.0445466239746537,
        0.0445466239746537,
        0.0445466239746537,
        0.0445466239746537,
        0.0445466239746537,
        0.0445466239746524,
        0.0445466239743774,
        0.0445466239313662,
        0.0445466191086134,
        0.0445462362167212,
        0.0445254259965382,
        0.0438309605116036,
        0.0348082840702459,
        0.0130424833093001,
        0.0025716510533394,
        0.0003846159729178,
        4.83466587556e-05,
        5.2710192966e-06,
        5.072843773e-07,
        4.36225894e-08,
        3.3825486e-09,
    ],
    (1, 50.0, 10): [
        0.0445466239746534,
        0.0445466239746534,
        0.0445466239746534,
        0.0445466239746534,
        0.0445466239746322,
        0.0445466239700204,
        0.0445466232872946,
        0.0445465540569926,
        0.044541816164709,
        0.0443361687068957,
        0.0400702970364514,
        0.0202282391919442,
        0.0046298765437913,
        0.0007291873852012,
        9.42391011615e-05,
        1.04487652676e-05,
        1.0154982853e-06,
        8.77491361e-08,
        6.8122834e-09,
        4.790362e-10,
    ],
    (1, 50.0, 25): [
        0.0445466239666784,
        0.0445466204961072,
        0.0445460267017184,
        0.0444961434339969,
        0.0426180096422101,
        0.0262204296220683,
        0.0064173170932329,
        0.0009380341233283,
        0.0001078238996947,
        1.04197988893e-05,
        8.720973776e-07,
    ],
    (1, 50.0, 40): [
        0.0433255675803968,
        0.0240597321399148,
        0.0038764497150701,
        0.0003471313065928,
        2.42413298855e-05,
        1.4320998279e-06,
    ],
}

# |coefficient| of the sin(N theta) harmonic projection of e^(ic<x,t>),
# x = (0.3, 0.4), c = 50, p = 0; keyed N -> {n: value}
COEFF_TABLES = {
    1: {
        0: 0.005331000423667241,
        1: 0.044286317178470834,
        2: 0.165821056937379,
        3: 0.3007289752527894,
        4: 0.1775918995268194,
        5: 0.1698366869978232,
        6: 0.1326556850627168,
        7: 0.1913962335203701,
        8: 0.01031820332780429,
        9: 0.152565949890189,
        10: 0.1596240985391338,
        11: 0.05077661980005957,
        12: 0.07004482833257132,
        13: 0.1328923889087414,
        14: 0.1238722286983581,
        15: 0.061583138099026304,
        16: 0.009273653953916678,
        17: 0.00122248630291202,
        18: 0.000596601861043556,
        19: 9.457503976218055e-05,
        20: 7.272803775518591e-06,
        21: 2.4717375001028277e-08,
        22: 5.6972141698606614e-08,
        23: 6.2613782485598335e-09,
        24: 2.8766208557844146e-10,
        25: 3.487372839216281e-12,
        26: 1.3447840016362339e-12,
        27: 8.389389113185264e-14,
        28: 3.090050472181085e-15,
        29: 5.438594709432636e-16,
    },
    10: {
        0: 0.06083490415455435,
        1: 0.02656230046895768,
        2: 0.04475286860599875,
        3: 0.004833769722091774,
        4: 0.03152644364681537,
        5: 0.03440099078209665,
        6: 0.01216643028774711,
        7: 0.0134865012161838,
        8: 0.02761069443786074,
        9: 0.0272952095751851,
        10: 0.01713503999971936,
        11: 0.004647646609621038,
        12: 0.0005498106244002701,
        13: 0.00045316284497442773,
        14: 9.388943333348342e-05,
        15: 1.01879056523128e-05,
        16: 4.6284204397583297e-07,
        17: 3.302969345113099e-08,
        18: 7.386880328505609e-09,
        19: 5.793842432833322e-10,
        20: 1.808244166685658e-11,
        21: 8.331243140844427e-13,
        22: 1.247624356690115e-13,
        23: 6.402836746674745e-15,
        24: 3.219490617035674e-16,
        25: 4.3921567152119325e-17,
        26: 4.216375878565715e-17,
        27: 1.192730971046164e-16,
        28: 5.964172072581517e-17,
        29: 9.795188267888765e-17,
    },
    30: {
        0: 0.0004972797526740737,
        1: 0.001401428942935588,
        2: 0.0027109255064577996,
        3: 0.003545718524468668,
        4: 0.002241476750854641,
        5: 0.0006682792235496367,
        6: 0.0001339565034261751,
        7: 2.09242021681993e-05,
        8: 2.6481370758651332e-06,
        9: 2.763313112747597e-07,
        10: 2.398228591769509e-08,
        11: 1.734961623216772e-09,
        12: 1.041121888882874e-10,
        13: 5.099613478241472e-12,
        14: 1.958321703329898e-13,
        15: 5.129356249335817e-15,
        16: 1.790936343596214e-16,
        17: 2.114685083013237e-16,
        18: 1.2211141714800042e-16,
        19: 1.7750288304083083e-16,
        20: 9.115790774963023e-17,
        21: 7.676533284257323e-17,
        22: 1.056865232130847e-16,
        23: 1.2828514932463002e-16,
        24: 1.301036117017623e-16,
        25: 6.302967734899496e-17,
        26: 7.542252119317336e-17,
        27: 6.734661033178359e-17,
        28: 7.752009233608848e-17,
        29: 1.184019207536341e-16,
    },
}

# relative error vs radial-node count: disk integral, c=20, 50 angular nodes,
# interpolatory radial rules
CHEB20_RADIAL_ERRORS = {
    6: 0.84109,
    8: 0.0007086400000000001,
    10: 1.5834e-08,
    12: 7.5601e-14,
    14: 6.8485e-15,
    16: 2.9262e-15,
    18: 7.5991e-15,
}

# reference disk integrals of e^(ic<x,t>), x = (0.9, 0.2): published table
# value and the exact closed-form value (40-digit evaluation)
DISK_INTEGRAL_TABLE = {20.0: -0.0584663041272372, 100.0: -0.0017164359830235}
DISK_INTEGRAL_EXACT = {20.0: -0.05846630412723734460944, 100.0: -0.001716435983023262650932}
