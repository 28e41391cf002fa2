// (nu, z_re, z_im, I_re, I_im, K_re, K_im), mpmath at 50 digits
pub const BESSEL_REFERENCE: &[(f64, f64, f64, f64, f64, f64, f64)] = &[
    (0.0, 1e-08, 0.0, 1.0, 0.0, 18.536612259610777, 0.0),
    (0.0, 0.01, 0.0, 1.0000250001562505, 0.0, 4.721244730161095, 0.0),
    (0.0, 0.5, 0.0, 1.0634833707413236, 0.0, 0.9244190712276659, 0.0),
    (0.0, 1.9, 0.0, 2.127740194053888, 0.0, 0.1288459792760475, 0.0),
    (0.0, 2.1, 0.0, 2.4462831294361824, 0.0, 0.10078374088996693, 0.0),
    (0.0, 0.8, 0.8, 0.9744182023732508, 0.31909001078114035, 0.20494393167589692, -0.4493671791285623),
    (0.0, 0.8, -0.8, 0.9744182023732508, -0.31909001078114035, 0.20494393167589692, 0.4493671791285623),
    (0.0, 3.5355339059327378, 3.5355339059327378, -6.2300824786663584, 0.11603438155019957, -0.01151172719949066, 0.011187586509869639),
    (0.0, 7.0710678118654755, -7.0710678118654755, 138.84046594163266, -56.37045855390669, 0.000129466330214806, 0.00030752456908814417),
    (0.0, 8.0, 0.0, 427.5641157218048, 0.0, 0.0001464707052228154, 0.0),
    (0.0, 15.0, 0.0, 339649.3732979139, 0.0, 9.819536482396435e-08, 0.0),
    (0.0, 29.5, 0.0, 478144163888.0398, 0.0, 3.545288867986941e-14, 0.0),
    (0.0, 21.213203435596427, 21.213203435596427, -46117602.57798512, 109955713.18250614, -1.2938269376020798e-10, -5.2899966066283093e-11),
    (0.0, 0.0, 2.0, 0.22389077914123567, 0.0, -0.8016962318836942, -0.35168681347830044),
    (0.0, -1.0, 1.0, 0.9376084768060293, -0.4965299476091221, -1.4796971087496251, -2.5883064433920073),
    (0.0, -3.0, 0.5, 4.443156099648072, -1.9106341810195926, -5.973501196791132, -13.939740951193542),
    (0.0, 4.0, -7.0, 7.607664733149037, -1.3590753381470677, 0.0026804897011386223, 0.0075582996952543655),
    (0.0, 0.3, 0.001, 1.0226266208612402, 0.00015169382101829393, 1.3724542810253197, -0.003055979443241117),
    (1e-07, 1e-08, 0.0, 0.9999981463404839, 0.0, 18.536612259621542, 0.0),
    (1e-07, 0.01, 0.0, 1.0000245280318807, 0.0, 4.721244730161305, 0.0),
    (1e-07, 0.5, 0.0, 1.0634832782994124, 0.0, 0.9244190712276715, 0.0),
    (1e-07, 1.9, 0.0, 2.127740181169282, 0.0, 0.12884597927604777, 0.0),
    (1e-07, 2.1, 0.0, 2.4462831193578003, 0.0, 0.10078374088996714, 0.0),
    (1e-07, 0.8, 0.8, 0.9744181818788487, 0.3190900557178582, 0.20494393167589658, -0.44936717912856394),
    (1e-07, 0.8, -0.8, 0.9744181818788487, -0.3190900557178582, 0.20494393167589658, 0.44936717912856394),
    (1e-07, 3.5355339059327378, 3.5355339059327378, -6.2300824775151815, 0.11603438043143592, -0.011511727199490661, 0.011187586509869655),
    (1e-07, 7.0710678118654755, -7.0710678118654755, 138.84046594161964, -56.370458553937475, 0.00012946633021480595, 0.0003075245690881443),
    (1e-07, 8.0, 0.0, 427.56411572178985, 0.0, 0.00014647070522281547, 0.0),
    (1e-07, 15.0, 0.0, 339649.37329791376, 0.0, 9.819536482396437e-08, 0.0),
    (1e-07, 29.5, 0.0, 478144163888.03973, 0.0, 3.5452888679869415e-14, 0.0),
    (1e-07, 21.213203435596427, 21.213203435596427, -46117602.57798513, 109955713.18250613, -1.2938269376020798e-10, -5.289996606628309e-11),
    (1e-07, 0.0, 2.0, 0.22389085931085229, 3.516869394084426e-08, -0.8016962318836954, -0.3516868134782988),
    (1e-07, -1.0, 1.0, 0.9376086247756968, -0.49652968877845655, -1.4796971087496318, -2.588306443391998),
    (1e-07, -3.0, 0.5, 4.4431566969979635, -1.910632787045402, -5.973501196791127, -13.939740951193512),
    (1e-07, 4.0, -7.0, 7.607664732880986, -1.3590753389029016, 0.0026804897011386193, 0.00755829969525437),
    (1e-07, 0.3, 0.001, 1.0226264836158132, 0.00015169412661619614, 1.3724542810253315, -0.0030559794432411685),
    (0.2, 1e-08, 0.0, 0.023816146715812288, 0.0, 104.90715487457538, 0.0),
    (0.2, 0.01, 0.0, 0.3774683518103074, 0.0, 5.614670974963906, 0.0),
    (0.2, 0.5, 0.0, 0.8690062889676071, 0.0, 0.9472622767730264, 0.0),
    (0.2, 1.9, 0.0, 2.0715605162436477, 0.0, 0.12996643162776295, 0.0),
    (0.2, 2.1, 0.0, 2.3945028912601276, 0.0, 0.10158822557266124, 0.0),
    (0.2, 0.8, 0.8, 0.9008234952179606, 0.4044268728936324, 0.2035797596549361, -0.4560408925324011),
    (0.2, 0.8, -0.8, 0.9008234952179606, -0.4044268728936324, 0.2035797596549361, 0.4560408925324011),
    (0.2, 3.5355339059327378, 3.5355339059327378, -6.21060605403031, 0.09396520482851359, -0.011515952647554346, 0.011247473715858226),
    (0.2, 7.0710678118654755, -7.0710678118654755, 138.55973339861637, -56.502261453298395, 0.00012924163426826312, 0.000308128975412394),
    (0.2, 8.0, 0.0, 426.41835624872317, 0.0, 0.00014681699055629562, 0.0),
    (0.2, 15.0, 0.0, 339180.5163054227, 0.0, 9.832229344177783e-08, 0.0),
    (0.2, 29.5, 0.0, 477814405476.7761, 0.0, 3.54765391461998e-14, 0.0),
    (0.2, 21.213203435596427, 21.213203435596427, -46148937.53064065, 109881657.49635518, -1.2946802797772386e-10, -5.2865271324503405e-11),
    (0.2, 0.0, 2.0, 0.3495499375289832, 0.11357565952014863, -0.8064363490816426, -0.3450117521514502),
    (0.2, -1.0, 1.0, 1.053714714299203, 0.06449889409417911, -1.506116037529433, -2.5511986530134125),
    (0.2, -3.0, 0.5, 4.67848817349793, 1.0425438431598777, -5.954796812269149, -13.817737576251774),
    (0.2, 4.0, -7.0, 7.59499742465977, -1.3761212983379916, 0.002668629969703462, 0.007573476899248798),
    (0.2, 0.3, 0.001, 0.7592846085848509, 0.0006002990423770427, 1.4204511430609685, -0.0032670520235914564),
    (0.3, 1e-08, 0.0, 0.0036030536107702115, 0.0, 462.5636031890663, 0.0),
    (0.3, 0.01, 0.0, 0.2273416857223144, 0.0, 6.8901026382927695, 0.0),
    (0.3, 0.5, 0.0, 0.7709517345792195, 0.0, 0.9764741243817879, 0.0),
    (0.3, 1.9, 0.0, 2.02276880101597, 0.0, 0.13137942527906504, 0.0),
    (0.3, 2.1, 0.0, 2.3466954118970245, 0.0, 0.10260207043456641, 0.0),
    (0.3, 0.8, 0.8, 0.843761213724914, 0.43978838365070694, 0.20179294305882067, -0.4644659989448757),
    (0.3, 0.8, -0.8, 0.843761213724914, -0.43978838365070694, 0.20179294305882067, 0.4644659989448757),
    (0.3, 3.5355339059327378, 3.5355339059327378, -6.188151002256824, 0.0682927253531457, -0.011521056531733527, 0.011322577361646389),
    (0.3, 7.0710678118654755, -7.0710678118654755, 138.2090927648202, -56.66607864287217, 0.0001289592440496823, 0.00030888527266740326),
    (0.3, 8.0, 0.0, 424.99074816044373, 0.0, 0.00014725095977362616, 0.0),
    (0.3, 15.0, 0.0, 338595.3785962502, 0.0, 9.848118041138284e-08, 0.0),
    (0.3, 29.5, 0.0, 477402531136.6711, 0.0, 3.550612418165781e-14, 0.0),
    (0.3, 21.213203435596427, 21.213203435596427, -46188034.416905284, 109789115.29133424, -1.295747300995487e-10, -5.282182546646352e-11),
    (0.3, 0.0, 2.0, 0.3792961865336871, 0.19326105993509962, -0.8123005844057699, -0.33658779425760976),
    (0.3, -1.0, 1.0, 0.9811953359913101, 0.3328739259336941, -1.5382870717177535, -2.5044710252450777),
    (0.3, -3.0, 0.5, 4.09046224236617, 2.400452400695522, -5.931002055737877, -13.666794879219454),
    (0.3, 4.0, -7.0, 7.579607968936682, -1.3961504487355232, 0.002653741866208319, 0.007592444063452651),
    (0.3, 0.3, 0.001, 0.6416467853098193, 0.0007151295309021761, 1.4823337752711896, -0.0035428462169895328),
    (0.5, 1e-08, 0.0, 7.978845608028654e-05, 0.0, 12533.141247823589, 0.0),
    (0.5, 0.01, 0.0, 0.07978978589453693, 0.0, 12.40843453284693, 0.0),
    (0.5, 0.5, 0.0, 0.5879930867904163, 0.0, 1.0750476034999203, 0.0),
    (0.5, 1.9, 0.0, 1.89176400649451, 0.0, 0.13599521326566796, 0.0),
    (0.5, 2.1, 0.0, 2.214404784674486, 0.0, 0.10590875899695358, 0.0),
    (0.5, 0.8, 0.8, 0.7042259222539028, 0.4872861214952073, 0.1954465466930328, -0.4920507680573012),
    (0.5, 0.8, -0.8, 0.7042259222539028, -0.4872861214952073, 0.1954465466930328, 0.4920507680573012),
    (0.5, 3.5355339059327378, 3.5355339059327378, -6.118247180534816, -0.011285643301900655, -0.011536044802946505, 0.011564739934364396),
    (0.5, 7.0710678118654755, -7.0710678118654755, 137.08897631309955, -57.183650554625565, 0.0001280441960370835, 0.0003113113059280714),
    (0.5, 8.0, 0.0, 420.4563140044776, 0.0, 0.00014864800666517284, 0.0),
    (0.5, 15.0, 0.0, 336729.8871870641, 0.0, 9.899131203287725e-08, 0.0),
    (0.5, 29.5, 0.0, 476086946457.51416, 0.0, 3.5600960430628855e-14, 0.0),
    (0.5, 21.213203435596427, 21.213203435596427, -46312609.04942705, 109493185.19786072, -1.2991643308130976e-10, -5.2682219765196345e-11),
    (0.5, 0.0, 2.0, 0.3627571890209923, 0.3627571890209923, -0.8305990167544448, -0.30903630331078863),
    (0.5, -1.0, 1.0, 0.6418384753379859, 0.7269806459635546, -1.6348167791004071, -2.352562840081062),
    (0.5, -3.0, 0.5, 1.8690004207328954, 4.1906773466218645, -5.851952680702515, -13.1952792715807),
    (0.5, 4.0, -7.0, 7.530820793413706, -1.4586521649451154, 0.0026056250665822357, 0.007653104642838611),
    (0.5, 0.3, 0.001, 0.4436046927257583, 0.0007834358011490153, 1.6951503204001768, -0.004520401105559679),
    (0.7, 1e-08, 0.0, 1.7017186453184341e-06, 0.0, 419743.7198241611, 0.0),
    (0.7, 0.01, 0.0, 0.026970819590196676, 0.0, 26.43387846582925, 0.0),
    (0.7, 0.5, 0.0, 0.4325399058247838, 0.0, 1.2384579270729807, 0.0),
    (0.7, 1.9, 0.0, 1.7276306031607636, 0.0, 0.14319546995810145, 0.0),
    (0.7, 2.1, 0.0, 2.04399243749272, 0.0, 0.11105158058275572, 0.0),
    (0.7, 0.8, 0.8, 0.5502219556332735, 0.4999575884820404, 0.18402872474579982, -0.5352366741143098),
    (0.7, 0.8, -0.8, 0.5502219556332735, -0.4999575884820404, 0.18402872474579982, 0.5352366741143098),
    (0.7, 3.5355339059327378, 3.5355339059327378, -6.0152524177349544, -0.12661688583562267, -0.011554605513505616, 0.011933236610944751),
    (0.7, 7.0710678118654755, -7.0710678118654755, 135.41437049462772, -57.94125318589743, 0.00012663880765108882, 0.0003149671000073154),
    (0.7, 8.0, 0.0, 413.7504111044002, 0.0, 0.00015076761953369036, 0.0),
    (0.7, 15.0, 0.0, 333951.3970449056, 0.0, 9.976137012173327e-08, 0.0),
    (0.7, 29.5, 0.0, 474120446071.6522, 0.0, 3.574368491267499e-14, 0.0),
    (0.7, 21.213203435596427, 21.213203435596427, -46497945.06230559, 109049877.48745166, -1.3042971804429124e-10, -5.247115290832495e-11),
    (0.7, 0.0, 2.0, 0.2555086972168447, 0.501464053405714, -0.8566484531934967, -0.2660290294708085),
    (0.7, -1.0, 1.0, 0.1862195186362097, 0.8572383205645993, -1.7610456763041797, -2.118838623605213),
    (0.7, -3.0, 0.5, -0.8613929191958134, 4.285654124937463, -5.726000887282446, -12.520048626546284),
    (0.7, 4.0, -7.0, 7.457993636235562, -1.550185200971576, 0.0025320870146006294, 0.007743987355051163),
    (0.7, 0.3, 0.001, 0.29553368054109214, 0.0007155270163181888, 2.060505528261893, -0.006290177453763656),
    (0.9999995, 1e-08, 0.0, 5.000048841768793e-09, 0.0, 99999073.17370263, 0.0),
    (0.9999995, 0.01, 0.0, 0.005000076803229134, 0.0, 99.97365805635889, 0.0),
    (0.9999995, 0.5, 0.0, 0.257894540653794, 0.0, 1.6564401955846815, 0.0),
    (0.9999995, 1.9, 0.0, 1.448244853156435, 0.0, 0.15966011912584274, 0.0),
    (0.9999995, 2.1, 0.0, 1.7455003299112433, 0.0, 0.12274638753738726, 0.0),
    (0.9999995, 0.8, 0.8, 0.33267945814944055, 0.46049722862403, 0.15132858365283944, -0.634397245220038),
    (0.9999995, 0.8, -0.8, 0.33267945814944055, -0.46049722862403, 0.15132858365283944, 0.634397245220038),
    (0.9999995, 3.5355339059327378, 3.5355339059327378, -5.797908328332126, -0.35977622440722423, -0.011577754370332217, 0.01273738887913516),
    (0.9999995, 7.0710678118654755, -7.0710678118654755, 131.87864607737194, -59.477607510670246, 0.00012351960860710928, 0.0003228018471396462),
    (0.9999995, 8.0, 0.0, 399.8731635052339, 0.0, 0.0001553692026505846, 0.0),
    (0.9999995, 15.0, 0.0, 328124.93329184956, 0.0, 1.0141729042444296e-07, 0.0),
    (0.9999995, 29.5, 0.0, 469968893520.4137, 0.0, 3.6048856226970863e-14, 0.0),
    (0.9999995, 21.213203435596427, 21.213203435596427, -46885733.91973331, 108110205.532521, -1.315233448897386e-10, -5.2015995959731575e-11),
    (0.9999995, 0.0, 2.0, 4.529586268227591e-07, 0.5767248358470008, -0.9059171216742905, -0.16812635073642254),
    (0.9999995, -1.0, 1.0, -0.3650274103561548, 0.6141610278974051, -1.954009624691318, -1.6064898645193524),
    (0.9999995, -3.0, 0.5, -3.559924178103698, 1.7198236989390505, -5.43585091474894, -11.20624591625418),
    (0.9999995, 4.0, -7.0, 7.302743274610367, -1.7390606942092117, 0.0023703403115363036, 0.007936599845616408),
    (0.9999995, 0.3, 0.001, 0.1516939594302636, 0.0005169810322593513, 3.055951975593827, -0.011558963021589928),
    (1.0, 1e-08, 0.0, 5e-09, 0.0, 99999999.9999999, 0.0),
    (1.0, 0.01, 0.0, 0.005000062500260418, 0.0, 99.97389411829624, 0.0),
    (1.0, 0.5, 0.0, 0.2578943053908963, 0.0, 1.656441120003301, 0.0),
    (1.0, 1.9, 0.0, 1.4482443730548888, 0.0, 0.15966015303266762, 0.0),
    (1.0, 2.1, 0.0, 1.7454998088361062, 0.0, 0.12274641153350789, 0.0),
    (1.0, 0.8, 0.8, 0.3326791295923067, 0.4604971162154282, 0.15132850727061917, -0.634397449692189),
    (1.0, 0.8, -0.8, 0.3326791295923067, -0.4604971162154282, 0.15132850727061917, 0.634397449692189),
    (1.0, 3.5355339059327378, 3.5355339059327378, -5.797907901792626, -0.3597766667766736, -0.011577754393252464, 0.012737390484218567),
    (1.0, 7.0710678118654755, -7.0710678118654755, 131.87863917568694, -59.477610426263375, 0.0001235196023118018, 0.00032280186258960353),
    (1.0, 8.0, 0.0, 399.8731367825601, 0.0, 0.00015536921180500115, 0.0),
    (1.0, 15.0, 0.0, 328124.9219702064, 0.0, 1.0141729369762092e-07, 0.0),
    (1.0, 29.5, 0.0, 469968885416.2773, 0.0, 3.604885682786713e-14, 0.0),
    (1.0, 21.213203435596427, 21.213203435596427, -46885734.672072485, 108110203.69317979, -1.3152334703795979e-10, -5.2015995058374226e-11),
    (1.0, 0.0, 2.0, 0.0, 0.5767248077568734, -0.9059172095959896, -0.16812615031243094),
    (1.0, -1.0, 1.0, -0.3650280288270878, 0.6141603349229036, -1.9540099018437813, -1.6064888475187316),
    (1.0, -3.0, 0.5, -3.559926123883095, 1.7198179060710168, -5.43585032282301, -11.20624349430998),
    (1.0, 4.0, -7.0, 7.302742968532646, -1.7390610580666155, 0.002370339987027637, 0.007936600222513444),
    (1.0, 0.3, 0.001, 0.15169378304769784, 0.000516980681147118, 3.0559542629739425, -0.011558975739485276),
    (1.3, 1e-08, 0.0, 1.3857898502962337e-11, 0.0, 27754235935.06383, 0.0),
    (1.3, 0.01, 0.0, 0.0008743837880548208, 0.0, 439.8400367633955, 0.0),
    (1.3, 0.5, 0.0, 0.14524850727904207, 0.0, 2.4102268763311265, 0.0),
    (1.3, 1.9, 0.0, 1.1626123609268855, 0.0, 0.18468370951991148, 0.0),
    (1.3, 2.1, 0.0, 1.4307036198045235, 0.0, 0.1403664578497747, 0.0),
    (1.3, 0.8, 0.8, 0.16367231442505248, 0.37578112910163386, 0.08552632878852917, -0.7850837773656959),
    (1.3, 0.8, -0.8, 0.16367231442505248, -0.37578112910163386, 0.08552632878852917, 0.7850837773656959),
    (1.3, 3.5355339059327378, 3.5355339059327378, -5.501916263522237, -0.6513476911298093, -0.011571447029556762, 0.013871583222898966),
    (1.3, 7.0710678118654755, -7.0710678118654755, 127.14658240696365, -61.40066806107565, 0.00011900519275423551, 0.0003335432696198753),
    (1.3, 8.0, 0.0, 381.87618264315097, 0.0, 0.00016181144151671234, 0.0),
    (1.3, 15.0, 0.0, 320407.5819011069, 0.0, 1.0370061733818858e-07, 0.0),
    (1.3, 29.5, 0.0, 464410564082.43176, 0.0, 3.6465843370607016e-14, 0.0),
    (1.3, 21.213203435596427, 21.213203435596427, -47397400.173847646, 106844027.48207475, -1.3300919487040719e-10, -5.138570292148857e-11),
    (1.3, 0.0, 2.0, -0.24367459751115328, 0.47823832500012853, -0.9576247914707796, -0.022338854149077457),
    (1.3, -1.0, 1.0, -0.5262863575609685, 0.1601804746674044, -2.050900862362377, -0.9060111945163636),
    (1.3, -3.0, 0.5, -3.092361410661063, -1.5628456267470086, -5.015107348194625, -9.668207394187755),
    (1.3, 4.0, -7.0, 7.089222506437304, -1.9844058807685954, 0.002139482636329842, 0.008195796302595183),
    (1.3, 0.3, 0.001, 0.07348456895471787, 0.0003232123664302271, 5.025116519707366, -0.0232579065258943),
    (1.5, 1e-08, 0.0, 2.659615202676218e-13, 0.0, 1253314137315.5002, 0.0),
    (1.5, 0.01, 0.0, 0.0002659641798923231, 0.0, 1253.25188781754, 0.0),
    (1.5, 0.5, 0.0, 0.09640347383401673, 0.0, 3.2251428104997606, 0.0),
    (1.5, 1.9, 0.0, 0.9826759816307223, 0.0, 0.20757164130023006, 0.0),
    (1.5, 2.1, 0.0, 1.2273499258262472, 0.0, 0.15634150137645528, 0.0),
    (1.5, 0.8, 0.8, 0.08395603097645746, 0.3096242490154593, 0.010068908340365071, -0.9217365897762599),
    (1.5, 0.8, -0.8, 0.08395603097645746, -0.3096242490154593, 0.010068908340365071, 0.9217365897762599),
    (1.5, 3.5355339059327378, 3.5355339059327378, -5.258744409703196, -0.8675780842819587, -0.011531986698543979, 0.014831684242061043),
    (1.5, 7.0710678118654755, -7.0710678118654755, 123.35190864285727, -62.83361213736655, 0.00011508525441984573, 0.0003423784314071894),
    (1.5, 8.0, 0.0, 367.899369386178, 0.0, 0.00016722900749831942, 0.0),
    (1.5, 15.0, 0.0, 314281.22804132284, 0.0, 1.0559073283506906e-07, 0.0),
    (1.5, 29.5, 0.0, 459948405899.6323, 0.0, 3.6807772648616273e-14, 0.0),
    (1.5, 21.213203435596427, 21.213203435596427, -47801789.51055473, 105820807.40918027, -1.3422032460341953e-10, -5.0861791899348605e-11),
    (1.5, 0.0, 2.0, -0.3473971624644554, 0.3473971624644554, -0.9851171684098392, 0.10626320506643382),
    (1.5, -1.0, 1.0, -0.4414892957484021, -0.08629781311851147, -1.9936898095907345, -0.3588730304903274),
    (1.5, -3.0, 0.5, -1.4768291639631206, -2.7495326909047706, -4.6672804205601155, -8.599407471030068),
    (1.5, 4.0, -7.0, 6.9119588423386125, -2.175028307118955, 0.0019417907245277534, 0.00840467070495292),
    (1.5, 0.3, 0.001, 0.04409631961725761, 0.00022312168852237747, 7.345538379632268, -0.03842303165486559),
    (1.9, 1e-08, 0.0, 9.251668504066922e-17, 0.0, 2844437137162459.5, 0.0),
    (1.9, 0.01, 0.0, 2.3239340922251146e-05, 0.0, 11323.593730735569, 0.0),
    (1.9, 0.5, 0.0, 0.04014182889177491, 0.0, 6.288895512742293, 0.0),
    (1.9, 1.9, 0.0, 0.6699291266648271, 0.0, 0.27438994853738335, 0.0),
    (1.9, 2.1, 0.0, 0.8634471489167722, 0.0, 0.20235335110491112, 0.0),
    (1.9, 0.8, 0.8, -0.0058956234316283225, 0.18557850891950645, -0.28062924011004337, -1.3073856740441379),
    (1.9, 0.8, -0.8, -0.0058956234316283225, -0.18557850891950645, -0.28062924011004337, 1.3073856740441379),
    (1.9, 3.5355339059327378, 3.5355339059327378, -4.660440540360763, -1.3144546356717062, -0.01129320114064998, 0.01731352799985055),
    (1.9, 7.0710678118654755, -7.0710678118654755, 114.31879963830406, -65.85713343289589, 0.00010456922281715701, 0.0003642608432413778),
    (1.9, 8.0, 0.0, 336.1558377828403, 0.0, 0.0001811260334200352, 0.0),
    (1.9, 15.0, 0.0, 299898.10265917686, 0.0, 1.1032275255563841e-07, 0.0),
    (1.9, 29.5, 0.0, 449291526096.3762, 0.0, 3.765143567651039e-14, 0.0),
    (1.9, 21.213203435596427, 21.213203435596427, -48743900.501430824, 103352528.92778537, -1.3718087363442221e-10, -4.9542630691133775e-11),
    (1.9, 0.0, 2.0, -0.3764580122860254, 0.05962509158160959, -0.9879391115058439, 0.4496987881139734),
    (1.9, -1.0, 1.0, -0.11278390860500608, -0.26102342070395923, -1.4007937706731874, 0.7448925702322025),
    (1.9, -3.0, 0.5, 1.6143337291459252, -1.829647405947098, -3.866820145940217, -6.552533957586302),
    (1.9, 4.0, -7.0, 6.465917169677316, -2.6041688781640877, 0.001422274685478874, 0.00890461869328603),
    (1.9, 0.3, 0.001, 0.01500072754487844, 9.57799185075002e-05, 17.263000812392928, -0.11197995666756544),
];
