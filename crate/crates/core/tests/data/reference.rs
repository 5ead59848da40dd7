// @generated by gen_reference.py (mpmath, 40 digits). Do not edit.

/// (x, Γ(x))
pub const GAMMA: &[(f64, f64)] = &[
    (0.001, 9.9942377248459546611e+2),
    (0.1, 9.5135076986687318363),
    (0.25, 3.6256099082219083119),
    (0.5, 1.7724538509055160273),
    (0.9, 1.0686287021193193549),
    (1.3, 8.9747069630627718849e-1),
    (2.5, 1.3293403881791370205),
    (3.7, 4.1706517837966031654),
    (7.25, 1.1553810139199896872e+3),
    (12.5, 1.3684336546556585726e+8),
    (20.1, 1.6376232006547293005e+17),
    (33.3, 7.487577596522706608e+35),
    (49.9, 4.1180110342530580419e+62),
    (50.0, 6.0828186403426756087e+62),
];

/// (ν, x, I_ν(x), K_ν(x))
pub const BESSEL: &[(f64, f64, f64, f64)] = &[
    (0.0, 0.001, 1.000000250000015625, 7.0236888005623813436),
    (0.0, 0.1, 1.0025015629340956014, 2.4270690247020166125),
    (0.0, 0.5, 1.0634833707413235193, 9.2441907122766586178e-1),
    (0.0, 1.0, 1.2660658777520083356, 4.2102443824070833334e-1),
    (0.0, 1.9, 2.1277401940538878569, 1.2884597927604747986e-1),
    (0.0, 2.0, 2.2795853023360672674, 1.1389387274953343565e-1),
    (0.0, 2.1, 2.4462831294361822913, 1.0078374088996694581e-1),
    (0.0, 5.0, 2.7239871823604446895e+1, 3.6910983340425942747e-3),
    (0.0, 10.0, 2.8157166284662544715e+3, 1.7780062316167651811e-5),
    (0.0, 25.0, 5.7745606064663103158e+9, 3.4641615622131143554e-12),
    (0.0, 40.0, 1.4894774793419899924e+16, 8.3928611000995670337e-19),
    (0.0, 60.0, 5.8940770556098011683e+24, 1.4138978405591078091e-27),
    (0.1, 0.001, 4.9153723842046870255e-1, 7.6735905190531842988),
    (0.1, 0.1, 7.8080543159979598895e-1, 2.4670534102276832031),
    (0.1, 0.5, 9.6783932510519777234e-1, 9.3008652913147853465e-1),
    (0.1, 1.0, 1.2172720202173660779, 4.2256594495516928669e-1),
    (0.1, 1.9, 2.1070363280218703672, 1.2912526780729538148e-1),
    (0.1, 2.0, 2.2602511870555942419, 1.1413020353680899301e-1),
    (0.1, 2.1, 2.4281183122238906779, 1.0098431524751701991e-1),
    (0.1, 5.0, 2.7208592388892934476e+1, 3.6944832782554554669e-3),
    (0.1, 10.0, 2.8142295628789305468e+3, 1.7788551507869295616e-5),
    (0.1, 25.0, 5.7733816464803194205e+9, 3.4648411683488903669e-12),
    (0.1, 40.0, 1.4892889136691857146e+16, 8.393897498905778373e-19),
    (0.1, 60.0, 5.8935817343797038733e+24, 1.4140147055762604558e-27),
    (0.3, 0.001, 1.1393858132853913531e-1, 1.4406547529041027961e+1),
    (0.3, 0.1, 4.5447035229197415217e-1, 2.8050564750215723107),
    (0.3, 0.5, 7.7095173457921946e-1, 9.7647412438178792102e-1),
    (0.3, 1.0, 1.0887949490168028633, 4.3507602420880202435e-1),
    (0.3, 1.9, 2.0227688010159704413, 1.3137942527906502387e-1),
    (0.3, 2.0, 2.1776379895537379568, 1.1603697434811925852e-1),
    (0.3, 2.1, 2.3466954118970241258, 1.0260207043456642528e-1),
    (0.3, 5.0, 2.6962093779437942705e+1, 3.7216693288734254993e-3),
    (0.3, 10.0, 2.8023624889744584638e+3, 1.7856607016823022452e-5),
    (0.3, 25.0, 5.7639587534186929745e+9, 3.470282759936808622e-12),
    (0.3, 40.0, 1.4877812549676171969e+16, 8.4021932613531396747e-19),
    (0.3, 60.0, 5.8896206713679765032e+24, 1.4149499716482443142e-27),
    (0.5, 0.001, 2.5231329425422680777e-2, 3.9593659513116643614e+1),
    (0.5, 0.1, 2.5273398460013197344e-1, 3.5861668387972601445),
    (0.5, 0.5, 5.8799308679041632549e-1, 1.0750476034999202387),
    (0.5, 1.0, 9.3767488824548764672e-1, 4.6106850444789455844e-1),
    (0.5, 1.9, 1.8917640064945101348, 1.3599521326566795789e-1),
    (0.5, 2.0, 2.0462368630890550366, 1.1993777196806144737e-1),
    (0.5, 2.1, 2.2144047846744857727, 1.0590875899695359003e-1),
    (0.5, 5.0, 2.6477547497559065205e+1, 3.7766133746428825595e-3),
    (0.5, 10.0, 2.778784603874571024e+3, 1.7993478093705179608e-5),
    (0.5, 25.0, 5.7451597483464657581e+9, 3.4811912768406951572e-12),
    (0.5, 40.0, 1.4847705549021964427e+16, 8.4188091949489054135e-19),
    (0.5, 60.0, 5.8817065760751872783e+24, 1.4168223500353694484e-27),
    (0.9999, 0.001, 5.0040140627129704944e-4, 9.9929412409806810876e+2),
    (0.9999, 0.1, 5.0079645897222451763e-2, 9.8514180827411237653),
    (0.9999, 0.5, 2.579413614335213466e-1, 1.656256254258060866),
    (0.9999, 1.0, 5.6522552209773417602e-1, 6.0186513115663105174e-1),
    (0.9999, 1.9, 1.4483403930730831748, 1.5965337213560098738e-1),
    (0.9999, 2.0, 1.590736846739791332, 1.3986018751350649679e-1),
    (0.9999, 2.1, 1.74560402300809468, 1.2274161263361717056e-1),
    (0.9999, 5.0, 2.4336186515052010162e+1, 4.0445396278177055823e-3),
    (0.9999, 10.0, 2.6710164596124863663e+3, 1.8648595662916305934e-5),
    (0.9999, 25.0, 5.6578882270140439966e+9, 3.5327642172733537187e-12),
    (0.9999, 40.0, 1.4707433398382037631e+16, 8.4971109737830936073e-19),
    (0.9999, 60.0, 5.8447614113693564761e+24, 1.4256296701404651275e-27),
    (1.0, 0.001, 5.0000006250000260417e-4, 9.9999623815608557428e+2),
    (1.0, 0.1, 5.0062526047092692114e-2, 9.8538447808706061348),
    (1.0, 0.5, 2.5789430539089631636e-1, 1.6564411200033008937),
    (1.0, 1.0, 5.6515910399248502721e-1, 6.0190723019723457474e-1),
    (1.0, 1.9, 1.4482443730548889539, 1.5966015303266761038e-1),
    (1.0, 2.0, 1.5906368546373290634, 1.3986588181652242728e-1),
    (1.0, 2.1, 1.7454998088361061591, 1.2274641153350791061e-1),
    (1.0, 5.0, 2.4335642142450527199e+1, 4.0446134454521642084e-3),
    (1.0, 10.0, 2.6709883037012546543e+3, 1.8648773453825584597e-5),
    (1.0, 25.0, 5.6578651298787013531e+9, 3.5327780731999337702e-12),
    (1.0, 40.0, 1.4707396163259352739e+16, 8.4971319548610386508e-19),
    (1.0, 60.0, 5.8447515883904682813e+24, 1.4256320265171043232e-27),
    (1.0001, 0.001, 4.9959903740184805932e-4, 1.0006988619844306856e+3),
    (1.0001, 0.1, 5.0045411726978371046e-2, 9.8562722208700079765),
    (1.0001, 0.5, 2.5784725630903247054e-1, 1.6566260218888131702),
    (1.0001, 1.0, 5.6509269036836891509e-1, 6.0194933604458700445e-1),
    (1.0001, 1.9, 1.4481483524520965139, 1.5966693487029099388e-1),
    (1.0001, 2.0, 1.590536861386351066, 1.3987157690080506093e-1),
    (1.0001, 2.1, 1.7453955929451873369, 1.2275121108514958574e-1),
    (1.0001, 5.0, 2.4335097729102980071e+1, 4.0446872717512026248e-3),
    (1.0001, 10.0, 2.6709601452836765453e+3, 1.8648951264162799032e-5),
    (1.0001, 25.0, 5.6578420305292016988e+9, 3.53279193056585686e-12),
    (1.0001, 40.0, 1.470735892450807996e+16, 8.4971529380885992868e-19),
    (1.0001, 60.0, 5.8447417644458394279e+24, 1.4256343831332673807e-27),
    (1.7, 0.001, 1.5827374571328374942e-6, 1.8582839998462770095e+5),
    (1.7, 0.1, 3.9793387822646628264e-3, 7.3722056663431058642e+1),
    (1.7, 0.5, 6.2759535142037902669e-2, 4.4441563201861339669),
    (1.7, 1.0, 2.1833881063130722782e-1, 1.1387178091799357611),
    (1.7, 1.9, 8.1744299216432679638e-1, 2.3689187682713977522e-1),
    (1.7, 2.0, 9.219547839853613437e-1, 2.0424626426274670554e-1),
    (1.7, 2.1, 1.0368775688891894061, 1.7663645748973691386e-1),
    (1.7, 5.0, 1.9748516040401815738e+1, 4.8026033101904890506e-3),
    (1.7, 10.0, 2.4182298212158207825e+3, 2.0404704827133554017e-5),
    (1.7, 25.0, 5.4438023965803026495e+9, 3.6661493444625825711e-12),
    (1.7, 40.0, 1.4359719441144179444e+16, 8.6977260596094729535e-19),
    (1.7, 60.0, 5.7526573767722322515e+24, 1.4480748008978123408e-27),
    (2.0, 0.001, 1.2500001041666699219e-7, 1.9999995000009717109e+6),
    (2.0, 0.1, 1.251041992241759124e-3, 1.9950396464211413931e+2),
    (2.0, 0.5, 3.1906149177738253813e-2, 7.5501835512408694366),
    (2.0, 1.0, 1.3574766976703828118e-1, 1.6248388986351774828),
    (2.0, 1.9, 6.0327243294347843175e-1, 2.9690929825780285921e-1),
    (2.0, 2.0, 6.8894844769873820405e-1, 2.5375975456605586294e-1),
    (2.0, 2.1, 7.8390235911608118734e-1, 2.1768508520759352734e-1),
    (2.0, 5.0, 1.7505614966624236015e+1, 5.3089437122234599581e-3),
    (2.0, 10.0, 2.2815189677260035406e+3, 2.1509817006932768731e-5),
    (2.0, 25.0, 5.3219313960760142075e+9, 3.746783808069109057e-12),
    (2.0, 40.0, 1.4159404985256932287e+16, 8.8177176978426189663e-19),
    (2.0, 60.0, 5.6992520026634522256e+24, 1.4614189081096779532e-27),
    (2.5, 0.001, 1.6820884681626110849e-9, 1.1889979911154879389e+8),
    (2.5, 0.1, 1.6832901734888532814e-4, 1.1870212236418931078e+3),
    (2.5, 0.5, 9.5722437863158802711e-3, 2.0425904466498484536e+1),
    (2.5, 1.0, 5.7098909203048247351e-2, 3.2274795311352619091),
    (2.5, 1.9, 3.4017035128810637209e-1, 4.6373991005550486473e-1),
    (2.5, 2.0, 3.9702708013939052333e-1, 3.8979775889619970395e-1),
    (2.5, 2.1, 4.610477477798470198e-1, 3.2925376096331830368e-1),
    (2.5, 5.0, 1.3766882138682582598e+1, 6.4957750043857580024e-3),
    (2.5, 10.0, 2.0285127573919356691e+3, 2.3931325864627888879e-5),
    (2.5, 25.0, 5.0833173453369529027e+9, 3.9156439481904139128e-12),
    (2.5, 40.0, 1.3761967080749733278e+16, 9.0660051518106025172e-19),
    (2.5, 60.0, 5.5925226694181572371e+24, 1.488844152828834062e-27),
    (3.0, 0.001, 2.0833334635416699219e-11, 7.9999990000001249998e+9),
    (3.0, 0.1, 2.0846357422327152638e-5, 7.9900124304654361785e+3),
    (3.0, 0.5, 2.6451119689902858564e-3, 6.2057909529930256386e+1),
    (3.0, 1.0, 2.2168424924331902476e-2, 7.101262824737944506),
    (3.0, 1.9, 1.7819714580546067651e-1, 7.8473235989119994555e-1),
    (3.0, 2.0, 2.1273995923985265527e-1, 6.4738539094863415316e-1),
    (3.0, 2.1, 2.5235245813880865945e-1, 5.3738466907178129602e-1),
    (3.0, 5.0, 1.0331150169151138387e+1, 8.2917684152309321748e-3),
    (3.0, 10.0, 1.7583807166108532381e+3, 2.7252700256598692089e-5),
    (3.0, 25.0, 4.8063561065065390799e+9, 4.1322634824909912193e-12),
    (3.0, 40.0, 1.329145566473365951e+16, 9.3789037246453005474e-19),
    (3.0, 60.0, 5.4648014548795714663e+24, 1.5230599537244161868e-27),
    (4.4, 0.001, 6.7010737373372535346e-17, 1.6957933160551409144e+15),
    (4.4, 0.1, 4.2300493268548404334e-8, 2.6856762944012162028e+6),
    (4.4, 0.5, 5.0890230347304774552e-5, 2.2179494506744595351e+3),
    (4.4, 1.0, 1.1121887065562470999e-3, 9.9517554183284819455e+1),
    (4.4, 1.9, 2.1101992316679570544e-2, 4.9304782663220463704),
    (4.4, 2.0, 2.691379567111160278e-2, 3.8329110978476927522),
    (4.4, 2.1, 3.3979198177651455891e-2, 3.0093013896667652118),
    (4.4, 5.0, 3.6841891581545004929, 2.0338350371999710144e-2),
    (4.4, 10.0, 1.0335029076592825057e+3, 4.4288988779587799441e-5),
    (4.4, 25.0, 3.8933964285978368621e+9, 5.0599546134818932135e-12),
    (4.4, 40.0, 1.1659983204556555844e+16, 1.0656916031679651246e-18),
    (4.4, 60.0, 5.0094252916279500368e+24, 1.6591312170023495745e-27),
    (7.25, 0.001, 1.3946631029583929454e-28, 4.9449588525237009571e+26),
    (7.25, 0.1, 4.4116484790511820497e-14, 1.5631080090844680137e+12),
    (7.25, 0.5, 5.1914729254318697978e-9, 1.3252302679019083964e+7),
    (7.25, 1.0, 8.0836642081069760543e-7, 8.449991766571248207e+4),
    (7.25, 1.9, 9.1762467549701865408e-5, 7.2662968117024571854e+2),
    (7.25, 2.0, 1.3466010281425798085e-4, 4.934213987286099559e+2),
    (7.25, 2.1, 1.9417110735373502205e-4, 3.4094565854849717212e+2),
    (7.25, 5.0, 1.8998437746389711837e-1, 2.9846491422769927109e-1),
    (7.25, 10.0, 2.0042190194700481818e+2, 2.0189735039251485265e-4),
    (7.25, 25.0, 1.9904134198850899507e+9, 9.6515534899491268298e-12),
    (7.25, 40.0, 7.6710827124154118396e+15, 1.603471154490314362e-18),
    (7.25, 60.0, 3.7915221116517951471e+24, 2.1820825820509999923e-27),
    (12.0, 0.001, 5.0968645970078609581e-49, 8.1749604542054423224e+46),
    (12.0, 0.1, 5.0978447527607469675e-25, 8.1731029266216976799e+22),
    (12.0, 0.5, 1.2503475166151626769e-16, 3.3294978321019208318e+14),
    (12.0, 1.0, 5.1957611533928502525e-13, 7.9914671748082742703e+10),
    (12.0, 1.9, 1.2089882004074148954e-9, 3.4037291844851182145e+7),
    (12.0, 2.0, 2.2541309777790282745e-9, 1.8231462081024157531e+7),
    (12.0, 2.1, 4.0799553767158429871e-9, 1.0058679046387878358e+7),
    (12.0, 5.0, 1.9966340269049919227e-4, 1.9256329134434572738e+2),
    (12.0, 10.0, 3.1127697762675091743, 1.0278998056493335846e-2),
    (12.0, 25.0, 3.2350195320734825181e+8, 5.5735699351119543442e-11),
    (12.0, 40.0, 2.440129433289008328e+15, 4.9068260179354701088e-18),
    (12.0, 60.0, 1.7645922777092590021e+24, 4.6309380635293723946e-27),
    (20.0, 0.001, 3.9199043962903192472e-85, 6.3777065563973791086e+82),
    (20.0, 0.1, 3.9203710314199734722e-45, 6.3768675266611856538e+42),
    (20.0, 0.5, 3.7494538480790195278e-31, 6.6655498744171556352e+28),
    (20.0, 1.0, 3.9668359858190200557e-25, 6.2943693604245351667e+22),
    (20.0, 1.9, 1.5381320672660732823e-19, 1.618045201488967555e+17),
    (20.0, 2.0, 4.3105605761095483322e-19, 5.770856852700241005e+16),
    (20.0, 2.1, 1.1493034283145568284e-18, 2.1633090694076422601e+16),
    (20.0, 5.0, 5.0242393579718059921e-11, 4.8270005206214846917e+8),
    (20.0, 10.0, 1.2507997356449475591e-4, 1.7874427820770548078e+2),
    (20.0, 25.0, 2.4498405422952304841e+6, 6.374402933035208743e-9),
    (20.0, 40.0, 1.0445963312947992368e+14, 1.0703023799997378908e-16),
    (20.0, 60.0, 2.1091734863057239868e+23, 3.7482954006874723837e-26),
    (30.0, 0.001, 3.5110746130524499355e-132, 4.7468847843445513542e+129),
    (30.0, 0.1, 3.5113577469743928335e-72, 4.7464756293248250739e+69),
    (30.0, 0.5, 3.2765420911635730695e-51, 5.0859562606406201424e+48),
    (30.0, 1.0, 3.5395005881064477467e-42, 4.706145526783626883e+39),
    (30.0, 1.9, 8.3307847296054768447e-34, 1.9966071476794613898e+31),
    (30.0, 2.0, 3.8935196641831642595e-33, 4.2711257548876875584e+30),
    (30.0, 2.1, 1.6883240212847231248e-32, 9.8475991476078045087e+29),
    (30.0, 5.0, 3.9978449712505648043e-21, 4.1121320636260597289e+18),
    (30.0, 10.0, 7.7875697831630483246e-12, 2.0302478125352421414e+9),
    (30.0, 25.0, 3.372072686049406518e+2, 3.796729955708764213e-5),
    (30.0, 40.0, 2.7269541250656895746e+11, 3.6670011340654641296e-14),
    (30.0, 60.0, 3.5634994123518100074e+21, 2.0916405470316505484e-24),
];
