// Generated by tests/reference/generate.py; do not edit by hand.
#![allow(dead_code)]

pub const NORMAL60: &[f64] = &[
    9.828959963845024,
    9.142428524953864,
    4.253026995547073,
    16.490322614014023,
    10.293367766847279,
    12.623150740890807,
    10.70185103714043,
    8.559106088742528,
    11.633074489306969,
    5.764897946876373,
    10.587754293918263,
    11.127924970525957,
    8.042226247311044,
    7.997188138722562,
    11.143047139259131,
    11.184768412460741,
    7.716186299175666,
    7.117142603169182,
    14.186963326330147,
    11.026349820229303,
    10.058904291767899,
    7.663777189673152,
    8.222771062817667,
    8.883298756990385,
    8.88259846608654,
    8.853003716126567,
    14.115991467372865,
    11.15642802477639,
    7.16505629998756,
    10.932856221892035,
    6.096388729617038,
    8.279444393175954,
    9.233931527011126,
    11.768972041954768,
    7.502147014546099,
    9.809560996299176,
    10.179187537690806,
    6.994319957093939,
    9.11857202599378,
    11.76280630952352,
    9.981251612770166,
    8.481161265710902,
    9.470390676246835,
    10.556303097373114,
    8.367440481524083,
    6.435866490334709,
    12.001102097885024,
    9.820972864632743,
    9.225514773995734,
    9.289745876844485,
    12.27221429119888,
    10.219403911394014,
    12.532123182352054,
    13.694102858006831,
    6.893466568670814,
    10.569211531663326,
    10.91389830933708,
    14.470752508575904,
    10.912799501016156,
    12.564080483503329,
];
pub const EXPO120: &[f64] = &[
    7.034858671661126,
    0.004795953785469542,
    1.1198744835216758,
    3.6302232362369717,
    3.4781886094794756,
    0.7590790032767717,
    0.14287585134520173,
    0.6969842684064714,
    0.1386898147058467,
    1.9704611340069706,
    0.23338567653157682,
    1.5772833984762262,
    1.1796201574841858,
    0.09983092135543202,
    1.5744840353222123,
    0.7787711489091433,
    0.13306851437085926,
    1.9094927061305602,
    2.0311909054773083,
    0.8394727999193782,
    0.13613607872706804,
    0.09196105707457831,
    1.7142967641903164,
    0.4692164557557463,
    0.6531845962692692,
    0.0509769718729801,
    0.9604235307830353,
    1.0966706153499899,
    0.7103557392454356,
    0.8234039764362175,
    0.04589785992497911,
    0.4605922859489347,
    0.851777051708865,
    0.6113217568736363,
    0.4664507098233175,
    0.06387254323721496,
    1.800288313482445,
    2.170588304244848,
    0.23291722332445064,
    1.228931519312814,
    0.46406247668544526,
    0.8837618799568961,
    0.3791844415621339,
    1.1910698182313437,
    0.010209861475038126,
    0.43895006600269526,
    0.5187201044205242,
    0.3344932225336336,
    1.5725570529298865,
    0.4912243263644349,
    1.3166068556230712,
    2.1069687370783985,
    1.4631715860619667,
    1.2066050862090079,
    1.3488017750398125,
    1.978030146722526,
    0.5664768657828323,
    3.60867558885507,
    0.7201889618463866,
    7.935573695631626,
    6.382577655322294,
    0.5549058042247488,
    0.40378825178057626,
    0.03942236227141836,
    1.702863293829955,
    0.5535767065056206,
    0.3186304164065378,
    1.0859833993312027,
    0.1619218196766849,
    0.20381030185896767,
    1.622836549313969,
    0.24086769892641846,
    0.5758925252834338,
    0.39662872919714004,
    0.7335881465648372,
    3.3592868294742435,
    0.18385831007226894,
    2.054759532799768,
    0.6144217645191344,
    1.190982289683034,
    0.18776047235548732,
    2.5018021294881123,
    0.2223383351210389,
    0.3898638290320146,
    0.2413480115064465,
    2.153927265172873,
    0.39398518186384157,
    1.2273404126589762,
    2.0311836947173196,
    0.020916814078981806,
    0.538716050549927,
    1.0380395199793395,
    1.818180457301816,
    1.3641593528256168,
    0.93819267877914,
    1.134775755815944,
    0.051313051698492554,
    0.4709799075388139,
    0.3492193500495665,
    2.3685640527304437,
    0.2021980408574982,
    1.7651523190982186,
    1.4562719636214656,
    1.7585766106428515,
    1.2255840926431505,
    0.01462732513103947,
    2.7865284275718967,
    0.23127726950888985,
    3.4037385295853193,
    1.6690451672076734,
    0.1865165556822586,
    0.6235162136266348,
    2.2365738351787647,
    0.8003655461233776,
    0.38590063987992557,
    1.1122060705108747,
    0.1556041141765307,
    1.1080248350406185,
    1.866368534797135,
    0.6635373101502526,
];
pub const WALK150: &[f64] = &[
    0.15072171052353678,
    -0.6352901754887904,
    -0.6958723822548688,
    -1.120809074179944,
    0.004933068994119161,
    0.21782160615335294,
    1.1048565635669554,
    1.6973233861935093,
    3.117559959823219,
    2.849920846209646,
    3.0268603357831516,
    3.481192013566355,
    3.289885374882938,
    2.5016488557190675,
    2.3434706583190947,
    3.391202247504448,
    4.421907363415594,
    4.744620001639973,
    4.8828220745491,
    3.9577235467896523,
    4.730220953877394,
    4.987990270130357,
    7.052790974320737,
    7.3430726757644065,
    6.800437358058633,
    6.497520770271469,
    5.472577860586906,
    6.053260078810658,
    5.764431785667464,
    5.511012399954206,
    3.8456949628478467,
    3.385407497009189,
    4.5393223210265425,
    2.5990855831184696,
    1.8765160102701164,
    2.148051765204099,
    0.7508999960183316,
    -0.005781336973527229,
    1.1773001805548824,
    1.6606564890497972,
    0.6697385080234397,
    0.4939300271744482,
    1.4027405029141906,
    0.6186108011721162,
    -0.18786724210175743,
    -1.3934403127136212,
    -1.4613604431181966,
    -2.1474553916767105,
    -0.8107022308238774,
    -0.9976097614609889,
    -0.8692984084624994,
    0.23727284728084197,
    0.4470543516483795,
    2.551257792057344,
    1.82319389359176,
    0.45014398214580154,
    0.3371226529985554,
    -0.9963264963992007,
    -0.4372586763140659,
    -1.122182060313696,
    -0.6129212761873793,
    -0.11805548726702281,
    -1.8279993140374176,
    -0.5764705255991298,
    -2.2379364218460704,
    -1.6603245591883218,
    -1.9240005719849622,
    -0.5838205679027615,
    -0.45803136999053795,
    -0.387661518328391,
    -0.10798732720720577,
    -1.3850051806354793,
    -1.274268849672073,
    -3.44271074150772,
    -3.7218844436972995,
    -5.711957922280728,
    -5.673858481570305,
    -6.46047662609409,
    -6.335928696338201,
    -6.001835096640281,
    -6.192519104909492,
    -4.503697504520458,
    -5.794341143534877,
    -5.259711512799742,
    -4.041850546713749,
    -2.3779330355360138,
    -2.104584296918333,
    -4.3709260039398785,
    -3.597159584464804,
    -3.652330712641942,
    -3.687294287398442,
    -2.4863767992281067,
    -2.453299480727163,
    -2.842817670223427,
    -2.935709308867141,
    -2.1708698845221086,
    -3.2710302409055925,
    -4.253635586905159,
    -4.525719733694458,
    -4.243286855682624,
    -3.6690885548481473,
    -5.105117396231256,
    -4.4846510655935665,
    -5.176224708803785,
    -3.9909614320538846,
    -4.79309694645094,
    -4.837917444337456,
    -3.927720689883707,
    -2.650927412299063,
    -2.5398635667669778,
    -2.576760921324788,
    -2.4594025957177714,
    -2.845796357013875,
    -1.4002939255444802,
    -1.845333545958238,
    0.021759402513186865,
    0.7387376198625788,
    0.517494330355336,
    -0.3646171037255068,
    -0.13107356791606886,
    -0.3575730538924623,
    -0.9326734750309839,
    -0.6567467888574816,
    -0.5330647949367072,
    -0.8088980345090768,
    -1.6237765883332613,
    -1.9683290397538626,
    -2.065926357427945,
    -2.423070669235339,
    -2.7910691865648496,
    -3.2959240272799333,
    -3.673999391292775,
    -1.5339755075595645,
    -0.4953277177993247,
    -1.501816957016239,
    -1.2713816700547254,
    -0.1484152328560291,
    -0.781161279105668,
    0.40452990412959566,
    -0.053297828663223135,
    0.7761936520514328,
    0.9446471505280474,
    0.8166893940862825,
    1.6333955129159206,
    2.2820418754141736,
    0.8929922744073744,
    1.6517027699843105,
    2.925585284227813,
    2.7847747845782713,
    1.3386964208450873,
];
pub const ARMA120: &[f64] = &[
    0.38369859064431316,
    0.518186861435724,
    1.564309715728556,
    2.2199948914377905,
    2.285297052621665,
    2.051981587178214,
    1.5705492224376911,
    -0.5316103084717257,
    -0.6328528828114452,
    0.19616694991759703,
    0.39621969582490013,
    0.8919195044232173,
    2.562950414747643,
    0.4988222044798044,
    1.3602157179365162,
    1.7905902159780813,
    1.1246998729454045,
    0.8948315386659658,
    1.7727749476179786,
    1.8451512991065666,
    1.7784840329031368,
    0.6740816000291403,
    0.9904483682985071,
    1.5183452269699278,
    1.1223045485517869,
    0.4929106872999519,
    -0.08886250904042998,
    -1.856824441843422,
    -3.041204080534003,
    -2.025830402754326,
    -0.538589795924311,
    0.18408893185264533,
    0.23968472359341197,
    -1.5689971049967968,
    -0.3771768538480642,
    0.6999110612233062,
    1.9063464882912795,
    2.305093211612257,
    1.808458000933463,
    0.44000189225760444,
    -1.30470138393135,
    0.4875570338771598,
    0.3194649013774845,
    0.4635802892088453,
    0.5152548027668503,
    1.1293477625038026,
    1.1891713363513556,
    0.5404888725439725,
    -0.19676126673222144,
    0.42277965857631544,
    -0.5399953889078416,
    -1.3838396615891364,
    -1.3778474521861015,
    -0.18746075242946125,
    -0.7610717601853426,
    -0.32214677471399505,
    -0.06819054587028346,
    -0.40597235750355787,
    -0.39400885726831064,
    -1.1380554575845603,
    -0.44347317679467946,
    1.7825895077413039,
    0.6025739205734154,
    -0.09500757532317658,
    -0.7721705421804177,
    -0.31665690904175803,
    -0.8264934411431518,
    -0.4656112749092627,
    0.783816052988727,
    0.6620310524112736,
    -0.2823039056285381,
    -1.656012798442928,
    -1.9364717787182761,
    -1.0472962648814632,
    0.9421803451895574,
    0.6737937856643703,
    -1.4161033092086344,
    -0.4942778096807078,
    -0.5583848834083827,
    -0.6345343002744247,
    -1.588864324209488,
    -0.9603845261692796,
    -2.843999980221677,
    0.22299416950226647,
    -1.6644482792399522,
    -0.9558456249256004,
    -0.7276774906200218,
    0.4683300073175135,
    1.0719204835000056,
    3.6660894939760658,
    1.1774602960735754,
    0.2742364100037055,
    -0.42151620450050437,
    -1.9535598702302193,
    -1.6462090674425864,
    -0.25356073190405026,
    1.1183091714940425,
    -0.197843467877521,
    -0.29246275089456303,
    0.4641094148115053,
    0.4649809201158371,
    -0.24921903523947256,
    -0.6613611517494244,
    -0.8281205087716098,
    0.37355578524377575,
    -0.2022403525353137,
    -0.8075719659296945,
    0.2921208260529458,
    -0.0673149230035327,
    0.3016891759504868,
    -0.09071915829777435,
    -0.7210912606519227,
    -0.44066694538278517,
    -1.0646590654928778,
    -2.1364060609599695,
    -3.051922053661712,
    -2.198767228216658,
    0.07263691044047901,
    0.8741312153102416,
    -1.3522132600438643,
];
pub const SEASONAL96: &[f64] = &[
    3.341157030875933,
    -0.9049836802163373,
    0.7535523888249226,
    -2.2583857132318768,
    3.0125350068312,
    -0.6769818155487461,
    0.9829769799260835,
    -2.221858840023656,
    3.2017189058293507,
    -0.7432533319919039,
    0.6890222156107138,
    -1.8945415114965278,
    3.408785839001772,
    -0.5621725247777736,
    1.2901692505927178,
    -1.0010446472441403,
    4.735130459567616,
    1.2939799126414526,
    2.4775894520389254,
    -0.38804909527464293,
    5.144809767543705,
    0.8428039372168428,
    2.165329419501332,
    -0.7395502038791009,
    5.098734138341128,
    1.1144932084621675,
    2.594002552932124,
    -0.49586095478618963,
    5.534691719119868,
    1.3985549246740545,
    3.0361205464592835,
    0.13325723798422162,
    5.769917002891505,
    1.599336517591836,
    3.092761670915599,
    0.42449779075739635,
    6.386750090686933,
    2.489068611074451,
    4.272479896877736,
    0.7715631546959325,
    5.957465035616737,
    2.3187181622233637,
    3.7077373342211075,
    0.94089348976377,
    6.4188621470715,
    2.8424584576882896,
    4.512372577054701,
    1.8212688687062266,
    7.2592652936113415,
    3.030732957894007,
    4.50739391150641,
    1.3619060456055285,
    7.058519110387174,
    3.1671846195466413,
    4.967542505195402,
    1.7525820123947589,
    7.475172566216409,
    3.7224295692264904,
    5.558005222505114,
    2.86244757540861,
    8.255892200911656,
    4.548067576968236,
    6.230875745893897,
    3.110410201071075,
    8.962282223032801,
    5.201276613026268,
    7.548863247522675,
    4.725378330085997,
    10.614394229155199,
    6.6602048132019425,
    8.364624829673032,
    5.083217884174859,
    10.94122015671952,
    6.629303477788872,
    7.896609006674046,
    4.996002947752329,
    10.531595747094531,
    6.6908788092568905,
    8.288890578128054,
    5.252204187264592,
    11.14589520072492,
    7.284225501295079,
    9.084109592209419,
    6.354269172340367,
    11.362967737521764,
    7.175392890797495,
    8.634170996099385,
    5.815729107787517,
    11.440732050186533,
    7.409466800845547,
    8.402710714319234,
    5.5860451644783895,
    11.123268457338101,
    7.094924196452555,
    8.818122836055787,
    6.010440842234255,
];
pub const NORMAL60_SW_W: f64 = 0.9920148913274864;
pub const NORMAL60_SW_P: f64 = 0.9639863882919492;
pub const NORMAL60_AD: f64 = 0.17317541398504233;
pub const NORMAL60_AD_P: f64 = 0.9240772249213914;
pub const NORMAL60_LILLIE_D: f64 = 0.07508594627935639;
pub const NORMAL60_LILLIE_P: f64 = 0.588127421820266;
pub const EXPO120_SW_W: f64 = 0.7234522336183087;
pub const EXPO120_SW_P: f64 = 9.796179011578273e-14;
pub const EXPO120_AD: f64 = 7.324853208348799;
pub const EXPO120_AD_P: f64 = 5.2884895024844794e-18;
pub const EXPO120_LILLIE_D: f64 = 0.18685318832458414;
pub const EXPO120_LILLIE_P: f64 = 4.215128521428004e-11;
pub const ARMA120_LB10_Q: f64 = 64.35894923118974;
pub const ARMA120_LB10_P: f64 = 6.460923638870301e-11;
pub const WALK150_KPSS_LEVEL: f64 = 1.1893617320640504;
pub const WALK150_KPSS_LEVEL_P: f64 = 0.01;
pub const NORMAL60_KPSS_TREND: f64 = 0.1532216183646611;
pub const NORMAL60_KPSS_TREND_P: f64 = 0.043981984696115736;
pub const WALK150_ADF_C: f64 = -1.890761409521061;
pub const WALK150_PP_C: f64 = -1.7567061308706298;
pub const WALK150_ADF_CT: f64 = -2.0357164734089555;
pub const WALK150_PP_CT: f64 = -1.8181385168593682;
pub const LL_ARMA11: f64 = -166.08789882354918;
pub const LL_ARMA21: f64 = -195.8249216635692;
pub const LL_MA2: f64 = -232.03895053725157;
pub const LL_SEAS: f64 = -229.44640836328193;
pub const LL_SEAS_D: f64 = -24.644872902884522;
