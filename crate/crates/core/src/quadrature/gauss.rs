//! Gauss-Legendre nodes and weights on [-1, 1].

pub const GL16_NODES: [f64; 16] = [
    -0.9894009349916499,
    -0.9445750230732326,
    -0.8656312023878318,
    -0.755404408355003,
    -0.6178762444026438,
    -0.45801677765722737,
    -0.2816035507792589,
    -0.09501250983763745,
    0.09501250983763745,
    0.2816035507792589,
    0.45801677765722737,
    0.6178762444026438,
    0.755404408355003,
    0.8656312023878318,
    0.9445750230732326,
    0.9894009349916499,
];

pub const GL16_WEIGHTS: [f64; 16] = [
    0.027152459411754037,
    0.062253523938647706,
    0.09515851168249259,
    0.12462897125553403,
    0.14959598881657676,
    0.16915651939500262,
    0.1826034150449236,
    0.18945061045506859,
    0.18945061045506859,
    0.1826034150449236,
    0.16915651939500262,
    0.14959598881657676,
    0.12462897125553403,
    0.09515851168249259,
    0.062253523938647706,
    0.027152459411754037,
];

pub const GL32_NODES: [f64; 32] = [
    -0.9972638618494816,
    -0.9856115115452684,
    -0.9647622555875064,
    -0.9349060759377397,
    -0.8963211557660522,
    -0.84936761373257,
    -0.7944837959679424,
    -0.7321821187402897,
    -0.6630442669302152,
    -0.5877157572407623,
    -0.5068999089322294,
    -0.42135127613063533,
    -0.33186860228212767,
    -0.23928736225213706,
    -0.1444719615827965,
    -0.04830766568773831,
    0.04830766568773831,
    0.1444719615827965,
    0.23928736225213706,
    0.33186860228212767,
    0.42135127613063533,
    0.5068999089322294,
    0.5877157572407623,
    0.6630442669302152,
    0.7321821187402897,
    0.7944837959679424,
    0.84936761373257,
    0.8963211557660522,
    0.9349060759377397,
    0.9647622555875064,
    0.9856115115452684,
    0.9972638618494816,
];

pub const GL32_WEIGHTS: [f64; 32] = [
    0.007018610009469298,
    0.016274394730905965,
    0.025392065309262427,
    0.034273862913021626,
    0.042835898022226426,
    0.050998059262376244,
    0.058684093478535704,
    0.06582222277636175,
    0.07234579410884845,
    0.07819389578707031,
    0.08331192422694685,
    0.08765209300440391,
    0.09117387869576386,
    0.09384439908080457,
    0.09563872007927483,
    0.09654008851472781,
    0.09654008851472781,
    0.09563872007927483,
    0.09384439908080457,
    0.09117387869576386,
    0.08765209300440391,
    0.08331192422694685,
    0.07819389578707031,
    0.07234579410884845,
    0.06582222277636175,
    0.058684093478535704,
    0.050998059262376244,
    0.042835898022226426,
    0.034273862913021626,
    0.025392065309262427,
    0.016274394730905965,
    0.007018610009469298,
];

pub const GL64_NODES: [f64; 64] = [
    -0.9993050417357722,
    -0.9963401167719552,
    -0.9910133714767443,
    -0.983336253884626,
    -0.973326827789911,
    -0.9610087996520538,
    -0.9464113748584028,
    -0.9295691721319396,
    -0.9105221370785028,
    -0.8893154459951141,
    -0.8659993981540928,
    -0.8406292962525803,
    -0.8132653151227975,
    -0.7839723589433414,
    -0.7528199072605319,
    -0.7198818501716108,
    -0.6852363130542333,
    -0.6489654712546573,
    -0.6111553551723933,
    -0.571895646202634,
    -0.5312794640198946,
    -0.48940314570705296,
    -0.4463660172534641,
    -0.4022701579639916,
    -0.3572201583376681,
    -0.31132287199021097,
    -0.2646871622087674,
    -0.21742364374000708,
    -0.1696444204239928,
    -0.12146281929612056,
    -0.07299312178779904,
    -0.02435029266342443,
    0.02435029266342443,
    0.07299312178779904,
    0.12146281929612056,
    0.1696444204239928,
    0.21742364374000708,
    0.2646871622087674,
    0.31132287199021097,
    0.3572201583376681,
    0.4022701579639916,
    0.4463660172534641,
    0.48940314570705296,
    0.5312794640198946,
    0.571895646202634,
    0.6111553551723933,
    0.6489654712546573,
    0.6852363130542333,
    0.7198818501716108,
    0.7528199072605319,
    0.7839723589433414,
    0.8132653151227975,
    0.8406292962525803,
    0.8659993981540928,
    0.8893154459951141,
    0.9105221370785028,
    0.9295691721319396,
    0.9464113748584028,
    0.9610087996520538,
    0.973326827789911,
    0.983336253884626,
    0.9910133714767443,
    0.9963401167719552,
    0.9993050417357722,
];

pub const GL64_WEIGHTS: [f64; 64] = [
    0.0017832807216942152,
    0.004147033260562923,
    0.006504457968979654,
    0.008846759826364391,
    0.011168139460131466,
    0.013463047896718231,
    0.015726030476025082,
    0.0179517157756973,
    0.020134823153530094,
    0.022270173808383007,
    0.024352702568710853,
    0.026377469715054627,
    0.028339672614259702,
    0.030234657072402495,
    0.03205792835485145,
    0.03380516183714179,
    0.03547221325688232,
    0.03705512854024015,
    0.03855015317861559,
    0.03995374113272035,
    0.041262563242623486,
    0.0424735151236536,
    0.043583724529323464,
    0.044590558163756545,
    0.045491627927418114,
    0.046284796581314375,
    0.04696818281621,
    0.0475401657148303,
    0.04799938859645832,
    0.048344762234802954,
    0.048575467441503456,
    0.04869095700913975,
    0.04869095700913975,
    0.048575467441503456,
    0.048344762234802954,
    0.04799938859645832,
    0.0475401657148303,
    0.04696818281621,
    0.046284796581314375,
    0.045491627927418114,
    0.044590558163756545,
    0.043583724529323464,
    0.0424735151236536,
    0.041262563242623486,
    0.03995374113272035,
    0.03855015317861559,
    0.03705512854024015,
    0.03547221325688232,
    0.03380516183714179,
    0.03205792835485145,
    0.030234657072402495,
    0.028339672614259702,
    0.026377469715054627,
    0.024352702568710853,
    0.022270173808383007,
    0.020134823153530094,
    0.0179517157756973,
    0.015726030476025082,
    0.013463047896718231,
    0.011168139460131466,
    0.008846759826364391,
    0.006504457968979654,
    0.004147033260562923,
    0.0017832807216942152,
];
