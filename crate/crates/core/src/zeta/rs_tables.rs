// Chebyshev coefficients (on the fractional part p in [0,1], argument
// x = 2p - 1) of the Riemann-Siegel remainder coefficient functions.
// Generated by tools/gen_oracles.py from an arbitrary-precision fit;
// do not edit by hand.

pub const C0_CHEB: [f64; 25] = [
    0.64266728623976838,
    2.6904930515036488e-42,
    0.27197299999785507,
    2.9595423566540137e-42,
    0.010738605819340284,
    -6.0685565495026745e-42,
    -0.0013743815296336614,
    -4.6336269220340618e-42,
    -0.00012468221880320677,
    1.1718591957660337e-41,
    -5.7645997067830480e-7,
    4.4692079022199499e-42,
    2.7280674295804522e-7,
    3.9894033080351325e-41,
    8.0779530595004706e-9,
    -1.1509331386987831e-41,
    -2.0884608068869654e-10,
    -6.4571833236087571e-41,
    -1.3115561854739527e-11,
    -3.8877624594227725e-41,
    -1.4207987228087185e-14,
    5.7397185098744507e-42,
    1.0271701357931162e-14,
    -4.9774121452817502e-42,
    1.3974598819518374e-16,
];

pub const C1_CHEB: [f64; 26] = [
    5.4943920305263550e-15,
    0.010697913921003323,
    -6.2490029487749879e-15,
    0.017170651243377833,
    2.3076446833202696e-15,
    0.0027932111497884894,
    -9.2388900105100217e-16,
    -3.6375653719270911e-5,
    2.2297960023927769e-16,
    -2.7108955231154393e-5,
    -1.6327439553963913e-17,
    -1.0483749866744886e-6,
    -5.8186094403443199e-18,
    5.8864671665263970e-8,
    1.1628422282603265e-18,
    4.3229672684837253e-9,
    6.1648629668843012e-20,
    -1.1369591587515020e-11,
    -1.3700211018311279e-20,
    -6.6998339101811119e-12,
    -5.9699326844632545e-22,
    -1.0079997653180436e-13,
    5.8887475015097866e-23,
    5.1524880084840142e-15,
    2.9964954638160824e-24,
    1.5216954472446211e-16,
];

pub const C2_CHEB: [f64; 27] = [
    0.0031461158518568383,
    -1.2526168252012716e-13,
    -0.0023087838821068914,
    2.3170721426900929e-14,
    5.7698206771697652e-5,
    -8.2908704116406656e-15,
    0.00035238862059504737,
    -8.0334153891847674e-16,
    2.5246667372180755e-5,
    1.0914201414463292e-15,
    -3.4428211908558544e-6,
    -2.7125689108627644e-16,
    -3.5350745340588847e-7,
    9.3019777223630569e-18,
    3.7308297327193503e-9,
    5.8247171204652660e-18,
    1.2776951625162972e-9,
    -3.3398760283668478e-19,
    2.1874621517866966e-11,
    -4.9984840993178137e-20,
    -1.9141408650491968e-12,
    1.9571967854208800e-21,
    -6.5628853860872480e-14,
    2.1038858512248005e-22,
    1.2585997565594902e-15,
    -5.3203113711204094e-24,
    8.1400809376947249e-17,
];

pub const C3_CHEB: [f64; 28] = [
    3.2306585798363921e-10,
    7.1232580794673438e-5,
    -3.6710974582290600e-10,
    0.00023234304906532366,
    1.3560158147318769e-10,
    -0.00012929911905757501,
    -5.4285188044028686e-11,
    1.8074496418598611e-5,
    1.3103559563486034e-11,
    6.5261850640448644e-6,
    -9.6033903554810703e-13,
    -1.1696361860831424e-7,
    -3.4167984425180429e-13,
    -7.3494763317225657e-8,
    6.8321562782243776e-14,
    -1.7750916461733367e-9,
    3.6174681810604830e-15,
    2.5555535118896090e-10,
    -8.0474998703602151e-16,
    1.1376641487145532e-11,
    -3.5036407837125854e-17,
    -3.3498675262936759e-13,
    3.4586821246141485e-18,
    -2.5537399656008869e-14,
    1.7589951037227654e-19,
    6.7666215980252172e-17,
    -6.5316790046529401e-21,
    2.9768939263732525e-17,
];

pub const C4_CHEB: [f64; 27] = [
    0.00016763355504726097,
    -1.2758343003412931e-9,
    -0.00022726054747813581,
    3.0031807408432655e-10,
    6.4763844942319009e-5,
    -1.0690064605131506e-10,
    -8.4881865810272300e-6,
    7.1633850116151091e-12,
    -2.6171096558682578e-6,
    5.9129645721335520e-12,
    8.3374752511292903e-7,
    -2.0824731239981511e-12,
    6.3272300232401919e-8,
    1.8499558502226818e-13,
    -1.0065000905172243e-8,
    2.9008070212736498e-14,
    -7.8253513642400208e-10,
    -4.1412554732061212e-15,
    3.1736078869432869e-11,
    -1.6948141404334045e-16,
    3.5032848269466727e-12,
    2.9659138786781603e-17,
    -1.4570492252441945e-14,
    6.7767099080292448e-19,
    -7.2824083650119504e-15,
    -1.1045496998426343e-19,
    -8.7322847544018401e-17,
];

