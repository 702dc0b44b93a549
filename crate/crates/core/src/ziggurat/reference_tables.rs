// Generated from NumPy's ziggurat constant tables; do not edit.
// Regenerated and checked by `ziggurat::precompute`.

pub(crate) const NORM_K: [u64; 256] = [
    0x000ef33d8025ef6a,
    0x0000000000000000,
    0x000c08be98fbc6a8,
    0x000da354fabd8142,
    0x000e51f67ec1eeea,
    0x000eb255e9d3f77e,
    0x000eef4b817ecab9,
    0x000f19470afa44aa,
    0x000f37ed61ffcb18,
    0x000f4f469561255c,
    0x000f61a5e41ba396,
    0x000f707a755396a4,
    0x000f7cb2ec28449a,
    0x000f86f10c6357d3,
    0x000f8fa6578325de,
    0x000f9724c74dd0da,
    0x000f9da907dbf509,
    0x000fa360f581fa74,
    0x000fa86fde5b4bf8,
    0x000facf160d354dc,
    0x000fb0fb6718b90f,
    0x000fb49f8d5374c6,
    0x000fb7ec2366fe77,
    0x000fbaece9a1e50e,
    0x000fbdab9d040bed,
    0x000fc03060ff6c57,
    0x000fc2821037a248,
    0x000fc4a67ae25bd1,
    0x000fc6a2977aee31,
    0x000fc87aa92896a4,
    0x000fca325e4bde85,
    0x000fcbcce902231a,
    0x000fcd4d12f839c4,
    0x000fceb54d8fec99,
    0x000fd007bf1dc930,
    0x000fd1464dd6c4e6,
    0x000fd272a8e2f450,
    0x000fd38e4ff0c91e,
    0x000fd49a9990b478,
    0x000fd598b8920f53,
    0x000fd689c08e99ec,
    0x000fd76ea9c8e832,
    0x000fd848547b08e8,
    0x000fd9178bad2c8c,
    0x000fd9dd07a7add2,
    0x000fda9970105e8c,
    0x000fdb4d5dc02e20,
    0x000fdbf95c5bfcd0,
    0x000fdc9debb99a7d,
    0x000fdd3b8118729d,
    0x000fddd288342f90,
    0x000fde6364369f64,
    0x000fdeee708d514e,
    0x000fdf7401a6b42e,
    0x000fdff46599ed40,
    0x000fe06fe4bc24f2,
    0x000fe0e6c225a258,
    0x000fe1593c28b84c,
    0x000fe1c78cbc3f99,
    0x000fe231e9db1caa,
    0x000fe29885da1b91,
    0x000fe2fb8fb54186,
    0x000fe35b33558d4a,
    0x000fe3b799d0002a,
    0x000fe410e99ead7f,
    0x000fe46746d47734,
    0x000fe4bad34c095c,
    0x000fe50baed29524,
    0x000fe559f74ebc78,
    0x000fe5a5c8e41212,
    0x000fe5ef3e138689,
    0x000fe6366fd91078,
    0x000fe67b75c6d578,
    0x000fe6be661e11aa,
    0x000fe6ff55e5f4f2,
    0x000fe73e5900a702,
    0x000fe77b823e9e39,
    0x000fe7b6e37070a2,
    0x000fe7f08d774243,
    0x000fe8289053f08c,
    0x000fe85efb35173a,
    0x000fe893dc840864,
    0x000fe8c741f0cebc,
    0x000fe8f9387d4ef6,
    0x000fe929cc879b1d,
    0x000fe95909d388ea,
    0x000fe986fb939aa2,
    0x000fe9b3ac714866,
    0x000fe9df2694b6d5,
    0x000fea0973abe67c,
    0x000fea329cf166a4,
    0x000fea5aab32952c,
    0x000fea81a6d5741a,
    0x000feaa797de1cf0,
    0x000feacc85f3d920,
    0x000feaf07865e63c,
    0x000feb13762fec13,
    0x000feb3585fe2a4a,
    0x000feb56ae3162b4,
    0x000feb76f4e284fa,
    0x000feb965fe62014,
    0x000febb4f4cf9d7c,
    0x000febd2b8f449d0,
    0x000febefb16e2e3e,
    0x000fec0be31ebde8,
    0x000fec2752b15a15,
    0x000fec42049dafd3,
    0x000fec5bfd29f196,
    0x000fec75406ceef4,
    0x000fec8dd2500cb4,
    0x000feca5b6911f12,
    0x000fecbcf0c427fe,
    0x000fecd38454fb15,
    0x000fece97488c8b3,
    0x000fecfec47f91b7,
    0x000fed1377358528,
    0x000fed278f844903,
    0x000fed3b10242f4c,
    0x000fed4dfbad586e,
    0x000fed605498c3dd,
    0x000fed721d414fe8,
    0x000fed8357e4a982,
    0x000fed9406a42cc8,
    0x000feda42b85b704,
    0x000fedb3c8746ab4,
    0x000fedc2df416652,
    0x000fedd171a46e52,
    0x000feddf813c8ad3,
    0x000feded0f909980,
    0x000fedfa1e0fd414,
    0x000fee06ae124bc4,
    0x000fee12c0d95a06,
    0x000fee1e579006e0,
    0x000fee29734b6524,
    0x000fee34150ae4bc,
    0x000fee3e3db89b3c,
    0x000fee47ee2982f4,
    0x000fee51271db086,
    0x000fee59e9407f41,
    0x000fee623528b42e,
    0x000fee6a0b5897f1,
    0x000fee716c3e077a,
    0x000fee7858327b82,
    0x000fee7ecf7b06ba,
    0x000fee84d2484ab2,
    0x000fee8a60b66343,
    0x000fee8f7accc851,
    0x000fee94207e25da,
    0x000fee9851a829ea,
    0x000fee9c0e13485c,
    0x000fee9f557273f4,
    0x000feea22762ccae,
    0x000feea4836b42ac,
    0x000feea668fc2d71,
    0x000feea7d76ed6fa,
    0x000feea8ce04fa0a,
    0x000feea94be8333b,
    0x000feea950296410,
    0x000feea8d9c0075e,
    0x000feea7e7897654,
    0x000feea678481d24,
    0x000feea48aa29e83,
    0x000feea21d22e4da,
    0x000fee9f2e352024,
    0x000fee9bbc26af2e,
    0x000fee97c524f2e4,
    0x000fee93473c0a3a,
    0x000fee8e40557516,
    0x000fee88ae369c7a,
    0x000fee828e7f3dfd,
    0x000fee7bdea7b888,
    0x000fee749bff37ff,
    0x000fee6cc3a9bd5e,
    0x000fee64529e007e,
    0x000fee5b45a32888,
    0x000fee51994e57b6,
    0x000fee474a0006cf,
    0x000fee3c53e12c50,
    0x000fee30b2e02ad8,
    0x000fee2462ad8205,
    0x000fee175eb83c5a,
    0x000fee09a22a1447,
    0x000fedfb27e349cc,
    0x000fedebea76216c,
    0x000feddbe422047e,
    0x000fedcb0ece39d3,
    0x000fedb964042cf4,
    0x000feda6dce938c9,
    0x000fed937237e98d,
    0x000fed7f1c38a836,
    0x000fed69d2b9c02b,
    0x000fed538d06ae00,
    0x000fed3c41dea422,
    0x000fed23e76a2fd8,
    0x000fed0a732fe644,
    0x000fecefda07fe34,
    0x000fecd4100eb7b8,
    0x000fecb708956eb4,
    0x000fec98b61230c1,
    0x000fec790a0da978,
    0x000fec57f50f31fe,
    0x000fec356686c962,
    0x000fec114cb4b335,
    0x000febeb948e6fd0,
    0x000febc429a0b692,
    0x000feb9af5ee0cdc,
    0x000feb6fe1c98542,
    0x000feb42d3ad1f9e,
    0x000feb13b00b2d4b,
    0x000feae2591a02e9,
    0x000feaaeae992257,
    0x000fea788d8ee326,
    0x000fea3fcffd73e5,
    0x000fea044c8dd9f6,
    0x000fe9c5d62f563b,
    0x000fe9843ba947a4,
    0x000fe93f471d4728,
    0x000fe8f6bd76c5d6,
    0x000fe8aa5dc4e8e6,
    0x000fe859e07ab1ea,
    0x000fe804f690a940,
    0x000fe7ab488233c0,
    0x000fe74c751f6aa5,
    0x000fe6e8102aa202,
    0x000fe67da0b6abd8,
    0x000fe60c9f38307e,
    0x000fe5947338f742,
    0x000fe51470977280,
    0x000fe48bd436f458,
    0x000fe3f9bffd1e37,
    0x000fe35d35eeb19c,
    0x000fe2b5122fe4fe,
    0x000fe20003995557,
    0x000fe13c82788314,
    0x000fe068c4ee67b0,
    0x000fdf82b02b71aa,
    0x000fde87c57efeaa,
    0x000fdd7509c63bfd,
    0x000fdc46e529bf13,
    0x000fdaf8f82e0282,
    0x000fd985e1b2ba75,
    0x000fd7e6ef48cf04,
    0x000fd613adbd650b,
    0x000fd40149e2f012,
    0x000fd1a1a7b4c7ac,
    0x000fcee204761f9e,
    0x000fcba8d85e11b2,
    0x000fc7d26ecd2d22,
    0x000fc32b2f1e22ed,
    0x000fbd6581c0b83a,
    0x000fb606c4005434,
    0x000fac40582a2874,
    0x000f9e971e014598,
    0x000f89fa48a41dfc,
    0x000f66c5f7f0302c,
    0x000f1a5a4b331c4a,
];

pub(crate) const NORM_W: [f64; 256] = [
    f64::from_bits(0x3ccf493b7815d979), // 8.683627060801306e-16
    f64::from_bits(0x3c8b8d0be3fdf6c6), // 4.779330175727737e-17
    f64::from_bits(0x3c9250af3c2c5bb4), // 6.354352417405262e-17
    f64::from_bits(0x3c957cb938443b61), // 7.454870481247696e-17
    f64::from_bits(0x3c9801fce82fa70c), // 8.3293668157931e-17
    f64::from_bits(0x3c9a230c2e4cd0bc), // 9.068060405059482e-17
    f64::from_bits(0x3c9c004d2f3861f7), // 9.714860076567762e-17
    f64::from_bits(0x3c9dac2f5a747274), // 1.0294750314241019e-16
    f64::from_bits(0x3c9f32482d4cd5c3), // 1.0823430288447684e-16
    f64::from_bits(0x3ca04d32278ebbad), // 1.131147019610903e-16
    f64::from_bits(0x3ca0f5053b025d43), // 1.176635945702292e-16
    f64::from_bits(0x3ca192a697413677), // 1.2193617278714363e-16
    f64::from_bits(0x3ca227a28f7a1af5), // 1.2597439914637093e-16
    f64::from_bits(0x3ca2b52e3863d880), // 1.2981099886264032e-16
    f64::from_bits(0x3ca33c3fc05791f5), // 1.3347203736824123e-16
    f64::from_bits(0x3ca3bd9ec1a2b12f), // 1.3697864842571203e-16
    f64::from_bits(0x3ca439ef8dff9b55), // 1.4034823001242382e-16
    f64::from_bits(0x3ca4b1bb363dfea7), // 1.4359529452056943e-16
    f64::from_bits(0x3ca52575621ad374), // 1.4673208742364422e-16
    f64::from_bits(0x3ca59580a707ce96), // 1.4976904668391037e-16
    f64::from_bits(0x3ca60231cfd97eea), // 1.5271515003596198e-16
    f64::from_bits(0x3ca66bd261a37c3d), // 1.5557818169460764e-16
    f64::from_bits(0x3ca6d2a292000570), // 1.5836494009290885e-16
    f64::from_bits(0x3ca736dad346f8a6), // 1.6108140175274928e-16
    f64::from_bits(0x3ca798ad10b32a77), // 1.6373285203969853e-16
    f64::from_bits(0x3ca7f845ad46f543), // 1.6632399058420835e-16
    f64::from_bits(0x3ca855cc53430a77), // 1.6885901708676596e-16
    f64::from_bits(0x3ca8b1649e7b769a), // 1.713417017655966e-16
    f64::from_bits(0x3ca90b2ea94ecf98), // 1.737754436586486e-16
    f64::from_bits(0x3ca96347822c1eea), // 1.7616331923000996e-16
    f64::from_bits(0x3ca9b9c98e38c546), // 1.7850812316976727e-16
    f64::from_bits(0x3caa0eccdca4a72c), // 1.8081240285799152e-16
    f64::from_bits(0x3caa62676d77cd59), // 1.830784876482675e-16
    f64::from_bits(0x3caab4ad6e101630), // 1.853085138861802e-16
    f64::from_bits(0x3cab05b16d136c9c), // 1.8750444639373882e-16
    f64::from_bits(0x3cab558487427a29), // 1.896680970077476e-16
    f64::from_bits(0x3caba4368e529f3a), // 1.918011406483862e-16
    f64::from_bits(0x3cabf1d62abf8232), // 1.9390512930625104e-16
    f64::from_bits(0x3cac3e70f9594ef3), // 1.9598150426628824e-16
    f64::from_bits(0x3cac8a13a5323b61), // 1.9803160683128174e-16
    f64::from_bits(0x3cacd4c9fe72268b), // 2.000566877627333e-16
    f64::from_bits(0x3cad1e9f0e80b748), // 2.0205791562071654e-16
    f64::from_bits(0x3cad679d29e41f10), // 2.0403638415480212e-16
    f64::from_bits(0x3cadafce0023b8c3), // 2.0599311887403706e-16
    f64::from_bits(0x3cadf73aa9f17653), // 2.079290829041402e-16
    f64::from_bits(0x3cae3debb5d2edfe), // 2.0984518222370352e-16
    f64::from_bits(0x3cae83e9337a6f00), // 2.1174227035760342e-16
    f64::from_bits(0x3caec93abdf982ce), // 2.1362115259449868e-16
    f64::from_bits(0x3caf0de784f06226), // 2.1548258978581458e-16
    f64::from_bits(0x3caf51f654d8f688), // 2.1732730177564367e-16
    f64::from_bits(0x3caf956d9e87d7ae), // 2.191559705042727e-16
    f64::from_bits(0x3cafd8537dfa2eac), // 2.2096924282235318e-16
    f64::from_bits(0x3cb00d56e04234ec), // 2.2276773304789553e-16
    f64::from_bits(0x3cb02e40f5398f9a), // 2.2455202529414355e-16
    f64::from_bits(0x3cb04eea9e16a5fc), // 2.263226755928568e-16
    f64::from_bits(0x3cb06f565b72a010), // 2.280802138345017e-16
    f64::from_bits(0x3cb08f869071f40b), // 2.2982514554424684e-16
    f64::from_bits(0x3cb0af7d84bc6113), // 2.3155795351040804e-16
    f64::from_bits(0x3cb0cf3d664bcc7f), // 2.3327909928004356e-16
    f64::from_bits(0x3cb0eec84b16086b), // 2.3498902453470955e-16
    f64::from_bits(0x3cb10e20329515ee), // 2.3668815235791604e-16
    f64::from_bits(0x3cb12d4707310fbe), // 2.3837688840454243e-16
    f64::from_bits(0x3cb14c3e9f8e9141), // 2.4005562198135063e-16
    f64::from_bits(0x3cb16b08bfc4201e), // 2.4172472704675025e-16
    f64::from_bits(0x3cb189a71a78da34), // 2.433845631371103e-16
    f64::from_bits(0x3cb1a81b51ee6d88), // 2.4503547622614954e-16
    f64::from_bits(0x3cb1c666f8f82acb), // 2.466777995232705e-16
    f64::from_bits(0x3cb1e48b93e0d42e), // 2.4831185421610877e-16
    f64::from_bits(0x3cb2028a9940a09f), // 2.4993795016204524e-16
    f64::from_bits(0x3cb2206572c4c6e9), // 2.515563865329658e-16
    f64::from_bits(0x3cb23e1d7de9c31f), // 2.5316745241713583e-16
    f64::from_bits(0x3cb25bb40ca96bfb), // 2.547714273816944e-16
    f64::from_bits(0x3cb2792a661dd37f), // 2.563685819989397e-16
    f64::from_bits(0x3cb29681c719d71b), // 2.579591783392867e-16
    f64::from_bits(0x3cb2b3bb62b82eda), // 2.5954347043351707e-16
    f64::from_bits(0x3cb2d0d862e1b853), // 2.6112170470670194e-16
    f64::from_bits(0x3cb2edd9e8cba98e), // 2.6269412038597256e-16
    f64::from_bits(0x3cb30ac10d6e48d7), // 2.6426094988411895e-16
    f64::from_bits(0x3cb3278ee1f4b930), // 2.658224191608307e-16
    f64::from_bits(0x3cb3444470265ea1), // 2.6737874806323633e-16
    f64::from_bits(0x3cb360e2baca52d5), // 2.689301506472616e-16
    f64::from_bits(0x3cb37d6abe05586a), // 2.704768354811995e-16
    f64::from_bits(0x3cb399dd6fb2b264), // 2.720190059327732e-16
    f64::from_bits(0x3cb3b63bbfb83d03), // 2.735568604408679e-16
    f64::from_bits(0x3cb3d28698561de0), // 2.7509059277301666e-16
    f64::from_bits(0x3cb3eebede725a83), // 2.7662039226963903e-16
    f64::from_bits(0x3cb40ae571e09e74), // 2.781464440759544e-16
    f64::from_bits(0x3cb426fb2da6745d), // 2.79668929362423e-16
    f64::from_bits(0x3cb44300e83c30a4), // 2.8118802553450207e-16
    f64::from_bits(0x3cb45ef773cac75d), // 2.827039064324479e-16
    f64::from_bits(0x3cb47adf9e66c336), // 2.842167425218406e-16
    f64::from_bits(0x3cb496ba32488f2f), // 2.8572670107546015e-16
    f64::from_bits(0x3cb4b287f602415d), // 2.87233946347098e-16
    f64::from_bits(0x3cb4ce49acb311dc), // 2.887386397378482e-16
    f64::from_bits(0x3cb4ea001638a605), // 2.9024093995538423e-16
    f64::from_bits(0x3cb505abef5e5562), // 2.9174100316669455e-16
    f64::from_bits(0x3cb5214df20a8b5a), // 2.9323898314471816e-16
    f64::from_bits(0x3cb53ce6d56a664f), // 2.947350314092935e-16
    f64::from_bits(0x3cb558774e1bb2c8), // 2.9622929736280665e-16
    f64::from_bits(0x3cb574000e555f78), // 2.977219284209029e-16
    f64::from_bits(0x3cb58f81c60e8514), // 2.992130701386013e-16
    f64::from_bits(0x3cb5aafd23241b59), // 3.007028663321331e-16
    f64::from_bits(0x3cb5c672d17d733d), // 3.0219145919680615e-16
    f64::from_bits(0x3cb5e1e37b2f8cd3), // 3.036789894211802e-16
    f64::from_bits(0x3cb5fd4fc89f5e38), // 3.051655962978219e-16
    f64::from_bits(0x3cb618b860a31fc3), // 3.0665141783089545e-16
    f64::from_bits(0x3cb6341de8a2b0a2), // 3.081365908408297e-16
    f64::from_bits(0x3cb64f8104b7260b), // 3.0962125106629225e-16
    f64::from_bits(0x3cb66ae257c99672), // 3.111055332636893e-16
    f64::from_bits(0x3cb6864283b13137), // 3.125895713043999e-16
    f64::from_bits(0x3cb6a1a22950b2b1), // 3.140734982699446e-16
    f64::from_bits(0x3cb6bd01e8b343bb), // 3.1555744654528006e-16
    f64::from_bits(0x3cb6d8626128d352), // 3.1704154791040285e-16
    f64::from_bits(0x3cb6f3c43161f854), // 3.1852593363044065e-16
    f64::from_bits(0x3cb70f27f78b68eb), // 3.2001073454440114e-16
    f64::from_bits(0x3cb72a8e516914c6), // 3.214960811527447e-16
    f64::from_bits(0x3cb745f7dc70eedc), // 3.2298210370394156e-16
    f64::from_bits(0x3cb7616535e5731f), // 3.244689322801698e-16
    f64::from_bits(0x3cb77cd6faeff449), // 3.2595669688230784e-16
    f64::from_bits(0x3cb7984dc8babd93), // 3.2744552751437067e-16
    f64::from_bits(0x3cb7b3ca3c8b1409), // 3.2893555426753697e-16
    f64::from_bits(0x3cb7cf4cf3db22fb), // 3.3042690740391284e-16
    f64::from_bits(0x3cb7ead68c73dee7), // 3.3191971744017523e-16
    f64::from_bits(0x3cb80667a486ea1f), // 3.3341411523123725e-16
    f64::from_bits(0x3cb82200dac88676), // 3.3491023205407785e-16
    f64::from_bits(0x3cb83da2ce899f15), // 3.364081996918765e-16
    f64::from_bits(0x3cb8594e1fd1f5bd), // 3.37908150518595e-16
    f64::from_bits(0x3cb875036f7a7ec5), // 3.394102175841489e-16
    f64::from_bits(0x3cb890c35f47f72d), // 3.409145347003126e-16
    f64::from_bits(0x3cb8ac8e9205c043), // 3.424212365275018e-16
    f64::from_bits(0x3cb8c865aba10c9c), // 3.4393045866258313e-16
    f64::from_bits(0x3cb8e44951446a27), // 3.454423377278584e-16
    f64::from_bits(0x3cb9003a2973b58f), // 3.4695701146137835e-16
    f64::from_bits(0x3cb91c38dc288347), // 3.4847461880874137e-16
    f64::from_bits(0x3cb9384612ef0afc), // 3.499953000165381e-16
    f64::from_bits(0x3cb954627903a28a), // 3.5151919672760744e-16
    f64::from_bits(0x3cb9708ebb70d5ee), // 3.53046452078274e-16
    f64::from_bits(0x3cb98ccb892e2a31), // 3.5457721079774357e-16
    f64::from_bits(0x3cb9a919933f99bf), // 3.5611161930983884e-16
    f64::from_bits(0x3cb9c5798cd5d92c), // 3.5764982583726505e-16
    f64::from_bits(0x3cb9e1ec2b6f7411), // 3.59191980508603e-16
    f64::from_bits(0x3cb9fe7226fad24a), // 3.6073823546823514e-16
    f64::from_bits(0x3cba1b0c39f93692), // 3.6228874498941915e-16
    f64::from_bits(0x3cba37bb21a2c85b), // 3.6384366559073444e-16
    f64::from_bits(0x3cba547f9e0bbb88), // 3.65403156156137e-16
    f64::from_bits(0x3cba715a724aa9a4), // 3.669673780588701e-16
    f64::from_bits(0x3cba8e4c64a0313d), // 3.685364952894914e-16
    f64::from_bits(0x3cbaab563e9ff108), // 3.7011067458828983e-16
    f64::from_bits(0x3cbac878cd5af5ce), // 3.716900855823823e-16
    f64::from_bits(0x3cbae5b4e18bb336), // 3.7327490092779435e-16
    f64::from_bits(0x3cbb030b4fc3a11a), // 3.7486529645684887e-16
    f64::from_bits(0x3cbb207cf09a985b), // 3.7646145133120287e-16
    f64::from_bits(0x3cbb3e0aa0e00c00), // 3.7806354820089604e-16
    f64::from_bits(0x3cbb5bb541ce3d03), // 3.7967177336979443e-16
    f64::from_bits(0x3cbb797db93f8927), // 3.8128631696783774e-16
    f64::from_bits(0x3cbb9764f1e5f73c), // 3.829073731305243e-16
    f64::from_bits(0x3cbbb56bdb85256e), // 3.8453514018609596e-16
    f64::from_bits(0x3cbbd3936b2ec0a2), // 3.8616982085091493e-16
    f64::from_bits(0x3cbbf1dc9b81ae83), // 3.878116224335587e-16
    f64::from_bits(0x3cbc10486cec16a0), // 3.894607570481926e-16
    f64::from_bits(0x3cbc2ed7e5f07a2d), // 3.9111744183782054e-16
    f64::from_bits(0x3cbc4d8c136e0d1c), // 3.9278189920805415e-16
    f64::from_bits(0x3cbc6c6608ec8705), // 3.944543570720877e-16
    f64::from_bits(0x3cbc8b66e0eba617), // 3.9613504910761354e-16
    f64::from_bits(0x3cbcaa8fbd36a2ab), // 3.9782421502646826e-16
    f64::from_bits(0x3cbcc9e1c73bd690), // 3.995221008578565e-16
    f64::from_bits(0x3cbce95e3068e037), // 4.012289592460629e-16
    f64::from_bits(0x3cbd0906328b8f6e), // 4.029450497636328e-16
    f64::from_bits(0x3cbd28db1037ef20), // 4.04670639241075e-16
    f64::from_bits(0x3cbd48de1533c647), // 4.0640600211422504e-16
    f64::from_bits(0x3cbd691096e7f123), // 4.0815142079049387e-16
    f64::from_bits(0x3cbd8973f4d7fba5), // 4.0990718603532664e-16
    f64::from_bits(0x3cbdaa0999206e70), // 4.1167359738030257e-16
    f64::from_bits(0x3cbdcad2f8fc490e), // 4.134509635544236e-16
    f64::from_bits(0x3cbdebd195522e37), // 4.1523960294026883e-16
    f64::from_bits(0x3cbe0d06fb49d21c), // 4.170398440568316e-16
    f64::from_bits(0x3cbe2e74c4ea46f6), // 4.1885202607101123e-16
    f64::from_bits(0x3cbe501c99c1d188), // 4.206764993399015e-16
    f64::from_bits(0x3cbe72002f97fe25), // 4.2251362598620494e-16
    f64::from_bits(0x3cbe94214b2abf0a), // 4.243637805093078e-16
    f64::from_bits(0x3cbeb681c0f76f08), // 4.262273504347798e-16
    f64::from_bits(0x3cbed9237610a73a), // 4.2810473700531167e-16
    f64::from_bits(0x3cbefc086101eca9), // 4.2999635591638323e-16
    f64::from_bits(0x3cbf1f328ac25321), // 4.3190263810026294e-16
    f64::from_bits(0x3cbf42a40fb74d6d), // 4.338240305622791e-16
    f64::from_bits(0x3cbf665f20c90168), // 4.357609972736849e-16
    f64::from_bits(0x3cbf8a6604899782), // 4.3771402012585875e-16
    f64::from_bits(0x3cbfaebb187122bf), // 4.3968359995105214e-16
    f64::from_bits(0x3cbfd360d22fe785), // 4.4167025761542035e-16
    f64::from_bits(0x3cbff859c118f60b), // 4.4367453519065673e-16
    f64::from_bits(0x3cc00ed447d3a075), // 4.456969972112043e-16
    f64::from_bits(0x3cc021a8028fc947), // 4.477382320247534e-16
    f64::from_bits(0x3cc034a983a902ab), // 4.49798853244555e-16
    f64::from_bits(0x3cc047da4e3ef5c7), // 4.518795013130059e-16
    f64::from_bits(0x3cc05b3bf6adb37e), // 4.539808451870034e-16
    f64::from_bits(0x3cc06ed023a72668), // 4.561035841567422e-16
    f64::from_bits(0x3cc082988f632e17), // 4.582484498109567e-16
    f64::from_bits(0x3cc0969708e8a254), // 4.604162081631153e-16
    f64::from_bits(0x3cc0aacd7571c0c4), // 4.626076619547846e-16
    f64::from_bits(0x3cc0bf3dd1eed448), // 4.648236531543207e-16
    f64::from_bits(0x3cc0d3ea34aa3d30), // 4.670650656712631e-16
    f64::from_bits(0x3cc0e8d4cf116593), // 4.693328283093329e-16
    f64::from_bits(0x3cc0fdffefa69fb6), // 4.716279179838351e-16
    f64::from_bits(0x3cc1136e04207041), // 4.739513632325867e-16
    f64::from_bits(0x3cc129219bbb5d35), // 4.763042480533137e-16
    f64::from_bits(0x3cc13f1d69c4096d), // 4.786877161048723e-16
    f64::from_bits(0x3cc1556448602e3b), // 4.811029753147417e-16
    f64::from_bits(0x3cc16bf93b9deef3), // 4.835513029411525e-16
    f64::from_bits(0x3cc182df74d21261), // 4.860340511450812e-16
    f64::from_bits(0x3cc19a1a564eebac), // 4.885526531353603e-16
    f64::from_bits(0x3cc1b1ad777f2f8e), // 4.91108629959527e-16
    f64::from_bits(0x3cc1c99ca971a694), // 4.937035980240335e-16
    f64::from_bits(0x3cc1e1ebfbe4ae39), // 4.963392774403987e-16
    f64::from_bits(0x3cc1fa9fc2e2d901), // 4.990175013091822e-16
    f64::from_bits(0x3cc213bc9d04cc81), // 5.017402260718089e-16
    f64::from_bits(0x3cc22d477a6fd3ee), // 5.045095430818727e-16
    f64::from_bits(0x3cc24745a4ac9c24), // 5.073276915733542e-16
    f64::from_bits(0x3cc261bcc77658e0), // 5.101970732341562e-16
    f64::from_bits(0x3cc27cb2faa8592e), // 5.131202686306784e-16
    f64::from_bits(0x3cc2982ecd770e78), // 5.161000557743228e-16
    f64::from_bits(0x3cc2b437532a0a52), // 5.191394311757699e-16
    f64::from_bits(0x3cc2d0d43196db97), // 5.222416338000234e-16
    f64::from_bits(0x3cc2ee0db1a978f5), // 5.254101724177597e-16
    f64::from_bits(0x3cc30becd256aeee), // 5.286488569504945e-16
    f64::from_bits(0x3cc32a7b5e68a4a3), // 5.3196183453384e-16
    f64::from_bits(0x3cc349c405ae12a3), // 5.353536311816497e-16
    f64::from_bits(0x3cc369d27a33a840), // 5.388292001334053e-16
    f64::from_bits(0x3cc38ab39256410a), // 5.423939782201712e-16
    f64::from_bits(0x3cc3ac7570ae88fa), // 5.46053951907478e-16
    f64::from_bits(0x3cc3cf27b31704a6), // 5.498157350892814e-16
    f64::from_bits(0x3cc3f2dbaa60f475), // 5.536866612467876e-16
    f64::from_bits(0x3cc417a49cb9e5da), // 5.576748932926576e-16
    f64::from_bits(0x3cc43d9815545e94), // 5.617895553555417e-16
    f64::from_bits(0x3cc464ce44a73a15), // 5.660408920082422e-16
    f64::from_bits(0x3cc48d62759c43bc), // 5.704404621291389e-16
    f64::from_bits(0x3cc4b7739d6b5a27), // 5.750013768919895e-16
    f64::from_bits(0x3cc4e3250dcd8902), // 5.797385945724594e-16
    f64::from_bits(0x3cc5109f53e9ac41), // 5.846692893455479e-16
    f64::from_bits(0x3cc54011523a7e42), // 5.898133176477899e-16
    f64::from_bits(0x3cc571b1a94ae41b), // 5.951938149641444e-16
    f64::from_bits(0x3cc5a5c08b718dd9), // 6.008379696271908e-16
    f64::from_bits(0x3cc5dc8a243ad0fe), // 6.067780409333449e-16
    f64::from_bits(0x3cc61669cf861e4c), // 6.130527208725282e-16
    f64::from_bits(0x3cc653ce7b006aea), // 6.197089894581626e-16
    f64::from_bits(0x3cc69540be9fe5c3), // 6.268046963301284e-16
    f64::from_bits(0x3cc6db6b8d09e232), // 6.344122407127506e-16
    f64::from_bits(0x3cc72728f05f7a34), // 6.426239659548055e-16
    f64::from_bits(0x3cc7799556090673), // 6.515603317344994e-16
    f64::from_bits(0x3cc7d42df4d6ce8c), // 6.613827885097664e-16
    f64::from_bits(0x3cc839030529f234), // 6.723150462505587e-16
    f64::from_bits(0x3cc8ab0fbfaa7c14), // 6.846803417564259e-16
    f64::from_bits(0x3cc92ee0946f4496), // 6.98971833638762e-16
    f64::from_bits(0x3cc9cbee014057ab), // 7.159994934830664e-16
    f64::from_bits(0x3cca8fdc7894775a), // 7.372424301798799e-16
    f64::from_bits(0x3ccb981f3878fdb1), // 7.658936370805573e-16
    f64::from_bits(0x3ccd3bb48209ad33), // 8.113849337656484e-16
];

pub(crate) const NORM_F: [f64; 256] = [
    f64::from_bits(0x3ff0000000000000), // 1.0
    f64::from_bits(0x3fef446ac979f087), // 0.9771017012676716
    f64::from_bits(0x3feeb7545b6ca915), // 0.9598790918001067
    f64::from_bits(0x3fee3f11e027f077), // 0.9451989534422996
    f64::from_bits(0x3fedd36fa704de95), // 0.9320600759592305
    f64::from_bits(0x3fed70920657bcf2), // 0.919991505039347
    f64::from_bits(0x3fed144978a119dc), // 0.9087264400521309
    f64::from_bits(0x3fecbd33a8a72deb), // 0.8980959218983434
    f64::from_bits(0x3fec6a5ecea9787f), // 0.8879846607558334
    f64::from_bits(0x3fec1b1cd9eebaea), // 0.8783096558089174
    f64::from_bits(0x3febceeb4ee1dc82), // 0.869008688036857
    f64::from_bits(0x3feb85653a8ff552), // 0.8600336211963315
    f64::from_bits(0x3feb3e3a8234dd10), // 0.851346258458678
    f64::from_bits(0x3feaf92a3f6ce8a2), // 0.8429156531122042
    f64::from_bits(0x3feab5fef17a2504), // 0.8347162929868834
    f64::from_bits(0x3fea748bd550c9e1), // 0.8267268339462214
    f64::from_bits(0x3fea34aafdf5af0f), // 0.8189291916037024
    f64::from_bits(0x3fe9f63bee651fd8), // 0.8113078743126563
    f64::from_bits(0x3fe9b9228d240681), // 0.8038494831709643
    f64::from_bits(0x3fe97d4657617ac1), // 0.796542330422959
    f64::from_bits(0x3fe94291c21b7a47), // 0.7893761435660246
    f64::from_bits(0x3fe908f1bd31714f), // 0.7823418326548025
    f64::from_bits(0x3fe8d0554fe60aa8), // 0.7754313049811872
    f64::from_bits(0x3fe898ad48badf02), // 0.7686373157984863
    f64::from_bits(0x3fe861ebfc37bcac), // 0.7619533468367954
    f64::from_bits(0x3fe82c050f56cf6e), // 0.7553735065070961
    f64::from_bits(0x3fe7f6ed4b20e2cb), // 0.7488924472191568
    f64::from_bits(0x3fe7c29a779c6858), // 0.742505296340151
    f64::from_bits(0x3fe78f033ca0b0d5), // 0.7362075981268627
    f64::from_bits(0x3fe75c1f0770d856), // 0.7299952645614762
    f64::from_bits(0x3fe729e5f43f6d12), // 0.7238645334686302
    f64::from_bits(0x3fe6f850baea7aee), // 0.717811932630722
    f64::from_bits(0x3fe6c7589e635a89), // 0.7118342488782484
    f64::from_bits(0x3fe696f75e513b2a), // 0.7059285013327543
    f64::from_bits(0x3fe667272a92e323), // 0.7000919181365116
    f64::from_bits(0x3fe637e298550c18), // 0.6943219161261167
    f64::from_bits(0x3fe6092498802665), // 0.6886160830046718
    f64::from_bits(0x3fe5dae86f4aff6a), // 0.6829721616449949
    f64::from_bits(0x3fe5ad29acc85c89), // 0.6773880362187735
    f64::from_bits(0x3fe57fe4264c8d8f), // 0.6718617198970821
    f64::from_bits(0x3fe55313f08d9e46), // 0.6663913439087501
    f64::from_bits(0x3fe526b55a656cd5), // 0.6609751477766631
    f64::from_bits(0x3fe4fac4e820b667), // 0.6556114705796973
    f64::from_bits(0x3fe4cf3f4f494ec0), // 0.6502987431108167
    f64::from_bits(0x3fe4a42172dc5278), // 0.6450354808208223
    f64::from_bits(0x3fe479685fdf5012), // 0.6398202774530566
    f64::from_bits(0x3fe44f114a493679), // 0.6346517992876236
    f64::from_bits(0x3fe425198a355fe3), // 0.6295287799248367
    f64::from_bits(0x3fe3fb7e99585b82), // 0.6244500155470265
    f64::from_bits(0x3fe3d23e10af31a3), // 0.6194143606058343
    f64::from_bits(0x3fe3a955a662cd0e), // 0.6144207238889139
    f64::from_bits(0x3fe380c32bda00d5), // 0.6094680649257734
    f64::from_bits(0x3fe358848bf550e9), // 0.6045553906974678
    f64::from_bits(0x3fe33097c9703a35), // 0.5996817526191253
    f64::from_bits(0x3fe308fafd6438ef), // 0.5948462437679874
    f64::from_bits(0x3fe2e1ac55ea3bee), // 0.590047996332826
    f64::from_bits(0x3fe2baaa14d7954a), // 0.5852861792633715
    f64::from_bits(0x3fe293f28e93cd15), // 0.5805599961007909
    f64::from_bits(0x3fe26d84290504ed), // 0.5758686829723537
    f64::from_bits(0x3fe2475d5a90db84), // 0.5712115067352532
    f64::from_bits(0x3fe2217ca92ff7f2), // 0.5665877632561644
    f64::from_bits(0x3fe1fbe0a9929620), // 0.5619967758145243
    f64::from_bits(0x3fe1d687fe549969), // 0.557437893618766
    f64::from_bits(0x3fe1b171573fd111), // 0.5529104904258323
    f64::from_bits(0x3fe18c9b709b3c50), // 0.5484139632552658
    f64::from_bits(0x3fe16805128639da), // 0.5439477311900263
    f64::from_bits(0x3fe143ad105ea99c), // 0.5395112342569521
    f64::from_bits(0x3fe11f9248311f38), // 0.5351039323804576
    f64::from_bits(0x3fe0fbb3a2325913), // 0.5307253044036621
    f64::from_bits(0x3fe0d810104142a0), // 0.5263748471716845
    f64::from_bits(0x3fe0b4a68d70d9ae), // 0.5220520746723218
    f64::from_bits(0x3fe091761d995d81), // 0.5177565172297564
    f64::from_bits(0x3fe06e7dccf03c36), // 0.513487720747327
    f64::from_bits(0x3fe04bbcafa63f2e), // 0.5092452459957479
    f64::from_bits(0x3fe02931e18b822a), // 0.5050286679434681
    f64::from_bits(0x3fe006dc85b8cac4), // 0.5008375751261487
    f64::from_bits(0x3fdfc9778c7bbda1), // 0.4966715690524897
    f64::from_bits(0x3fdf859da7a900ca), // 0.49253026364386854
    f64::from_bits(0x3fdf4229cb2f7af3), // 0.48841328470545803
    f64::from_bits(0x3fdeff1a717e8f95), // 0.4843202694266833
    f64::from_bits(0x3fdebc6e20bd1f54), // 0.48025086590904675
    f64::from_bits(0x3fde7a236a4ec3c5), // 0.47620473271950586
    f64::from_bits(0x3fde3838ea5f9b85), // 0.4721815384677302
    f64::from_bits(0x3fddf6ad47763a09), // 0.4681809614056936
    f64::from_bits(0x3fddb57f320b56b1), // 0.46420268904817436
    f64::from_bits(0x3fdd74ad6426de33), // 0.46024641781284287
    f64::from_bits(0x3fdd3436a1021080), // 0.45631185267871643
    f64::from_bits(0x3fdcf419b4ae5b6d), // 0.4523987068618485
    f64::from_bits(0x3fdcb45573c0a848), // 0.44850670150720306
    f64::from_bits(0x3fdc74e8bb00d7c7), // 0.4446355653957394
    f64::from_bits(0x3fdc35d26f1d2cb8), // 0.440785034665804
    f64::from_bits(0x3fdbf7117c616a17), // 0.43695485254798555
    f64::from_bits(0x3fdbb8a4d6716d91), // 0.43314476911265226
    f64::from_bits(0x3fdb7a8b7807131b), // 0.4293545410294414
    f64::from_bits(0x3fdb3cc462b331ca), // 0.42558393133802197
    f64::from_bits(0x3fdaff4e9ea18552), // 0.4218327092294959
    f64::from_bits(0x3fdac2293a5f5a9e), // 0.4181006498378482
    f64::from_bits(0x3fda85534aa4d880), // 0.4143875340408911
    f64::from_bits(0x3fda48cbea20c04d), // 0.41069314827018816
    f64::from_bits(0x3fda0c923946843e), // 0.40701728432947337
    f64::from_bits(0x3fd9d0a55e1e93df), // 0.4033597392211145
    f64::from_bits(0x3fd995048418c0c6), // 0.3997203149801972
    f64::from_bits(0x3fd959aedbe09f93), // 0.39609881851583245
    f64::from_bits(0x3fd91ea39b33cb17), // 0.3924950614593156
    f64::from_bits(0x3fd8e3e1fcb9f115), // 0.3889088600187887
    f64::from_bits(0x3fd8a9693fde9188), // 0.3853400348400773
    f64::from_bits(0x3fd86f38a8ac5ab6), // 0.38178841087339366
    f64::from_bits(0x3fd8354f7faa0dd9), // 0.3782538172456192
    f64::from_bits(0x3fd7fbad11b8d911), // 0.37473608713789114
    f64::from_bits(0x3fd7c250aff414b0), // 0.3712350576682395
    f64::from_bits(0x3fd78939af9252eb), // 0.3677505697790326
    f64::from_bits(0x3fd7506769c7b1ed), // 0.36428246812900406
    f64::from_bits(0x3fd717d93ba9614c), // 0.36083060098964803
    f64::from_bits(0x3fd6df8e86124caa), // 0.3573948201457805
    f64::from_bits(0x3fd6a786ad88de21), // 0.3539749808000768
    f64::from_bits(0x3fd66fc11a25cbe2), // 0.3505709414814061
    f64::from_bits(0x3fd6383d377be515), // 0.34718256395679364
    f64::from_bits(0x3fd600fa7480d2c8), // 0.3438097131468507
    f64::from_bits(0x3fd5c9f84376c244), // 0.34045225704452187
    f64::from_bits(0x3fd5933619d6eebe), // 0.33711006663700605
    f64::from_bits(0x3fd55cb3703d0100), // 0.33378301583071845
    f64::from_bits(0x3fd5266fc2533bed), // 0.3304709813791636
    f64::from_bits(0x3fd4f06a8ebf6d92), // 0.3271738428136014
    f64::from_bits(0x3fd4baa357109ca2), // 0.3238914823763911
    f64::from_bits(0x3fd485199fad6ad4), // 0.32062378495690536
    f64::from_bits(0x3fd44fccefc324fe), // 0.3173706380299136
    f64::from_bits(0x3fd41abcd1357a19), // 0.3141319315963372
    f64::from_bits(0x3fd3e5e8d08ed2db), // 0.3109075581262865
    f64::from_bits(0x3fd3b1507cf143ae), // 0.30769741250429206
    f64::from_bits(0x3fd37cf368081379), // 0.30450139197665
    f64::from_bits(0x3fd348d125f9d19e), // 0.30131939610080305
    f64::from_bits(0x3fd314e94d5af62f), // 0.2981513266966855
    f64::from_bits(0x3fd2e13b77210766), // 0.2949970877999618
    f64::from_bits(0x3fd2adc73e963fdd), // 0.2918565856170952
    f64::from_bits(0x3fd27a8c414db11e), // 0.2887297284821829
    f64::from_bits(0x3fd2478a1f17de89), // 0.28561642681550176
    f64::from_bits(0x3fd214c079f7cc9e), // 0.2825165930837076
    f64::from_bits(0x3fd1e22ef6188116), // 0.27943014176163794
    f64::from_bits(0x3fd1afd539c2f050), // 0.2763569892956683
    f64::from_bits(0x3fd17db2ed5454e8), // 0.27329705406857707
    f64::from_bits(0x3fd14bc7bb34ee67), // 0.27025025636587546
    f64::from_bits(0x3fd11a134fcf2423), // 0.26721651834356147
    f64::from_bits(0x3fd0e895598709c4), // 0.2641957639972612
    f64::from_bits(0x3fd0b74d88b242da), // 0.2611879191327212
    f64::from_bits(0x3fd0863b8f904336), // 0.25819291133761924
    f64::from_bits(0x3fd0555f2242e9d9), // 0.25521066995466196
    f64::from_bits(0x3fd024b7f6c7747e), // 0.2522411260559422
    f64::from_bits(0x3fcfe88b89df93c5), // 0.24928421241852852
    f64::from_bits(0x3fcf88108cb83235), // 0.24633986350126383
    f64::from_bits(0x3fcf27fe6ce998d2), // 0.2434080154227503
    f64::from_bits(0x3fcec854a4c99c44), // 0.2404886059405006
    f64::from_bits(0x3fce6912b2283cdd), // 0.2375815744312381
    f64::from_bits(0x3fce0a3816457184), // 0.23468686187233
    f64::from_bits(0x3fcdabc455c7900a), // 0.23180441082433872
    f64::from_bits(0x3fcd4db6f8b2514f), // 0.22893416541468034
    f64::from_bits(0x3fccf00f8a5e6fcc), // 0.22607607132238028
    f64::from_bits(0x3fcc92cd9971df53), // 0.22323007576391748
    f64::from_bits(0x3fcc35f0b7d89d47), // 0.220396127480152
    f64::from_bits(0x3fcbd9787abe18a1), // 0.21757417672433113
    f64::from_bits(0x3fcb7d647a8731aa), // 0.21476417525117358
    f64::from_bits(0x3fcb21b452ccd13a), // 0.21196607630703018
    f64::from_bits(0x3fcac667a2571807), // 0.20917983462112508
    f64::from_bits(0x3fca6b7e0b19267e), // 0.2064054063978808
    f64::from_bits(0x3fca10f7322d7e3d), // 0.2036427493103349
    f64::from_bits(0x3fc9b6d2bfd2fe5a), // 0.2008918224946566
    f64::from_bits(0x3fc95d105f6a7c27), // 0.19815258654577514
    f64::from_bits(0x3fc903afbf74fa69), // 0.1954250035141343
    f64::from_bits(0x3fc8aab09192815b), // 0.19270903690358918
    f64::from_bits(0x3fc852128a819a38), // 0.19000465167046499
    f64::from_bits(0x3fc7f9d5621f7175), // 0.1873118142238003
    f64::from_bits(0x3fc7a1f8d368a323), // 0.18463049242679927
    f64::from_bits(0x3fc74a7c9c7ab5a6), // 0.18196065559952251
    f64::from_bits(0x3fc6f3607e964716), // 0.17930227452284758
    f64::from_bits(0x3fc69ca43e21f25c), // 0.17665532144373486
    f64::from_bits(0x3fc64647a2adf19c), // 0.17401977008183855
    f64::from_bits(0x3fc5f04a76f883f9), // 0.17139559563750575
    f64::from_bits(0x3fc59aac88f31d6c), // 0.1687827748012113
    f64::from_bits(0x3fc5456da9c86835), // 0.1661812857644819
    f64::from_bits(0x3fc4f08dade31fc1), // 0.16359110823236558
    f64::from_bits(0x3fc49c0c6cf5ce2d), // 0.161012223437511
    f64::from_bits(0x3fc447e9c20375d5), // 0.15844461415592428
    f64::from_bits(0x3fc3f4258b6931ae), // 0.1558882647244792
    f64::from_bits(0x3fc3a0bfaae8d7ee), // 0.15334316106026286
    f64::from_bits(0x3fc34db805b4ab88), // 0.15080929068184568
    f64::from_bits(0x3fc2fb0e847c2a65), // 0.14828664273257455
    f64::from_bits(0x3fc2a8c3137a071a), // 0.14577520800599403
    f64::from_bits(0x3fc256d5a2835eb7), // 0.14327497897351346
    f64::from_bits(0x3fc2054625183c34), // 0.1407859498144447
    f64::from_bits(0x3fc1b41492757d42), // 0.13830811644855073
    f64::from_bits(0x3fc16340e5a82d63), // 0.13584147657125376
    f64::from_bits(0x3fc112cb1da26eb9), // 0.13338602969166916
    f64::from_bits(0x3fc0c2b33d5209ba), // 0.13094177717364436
    f64::from_bits(0x3fc072f94bb8bf85), // 0.12850872227999957
    f64::from_bits(0x3fc0239d54067d2a), // 0.1260868702201859
    f64::from_bits(0x3fbfa93ecb6b222c), // 0.12367622820159657
    f64::from_bits(0x3fbf0bff29520e1c), // 0.1212768054847903
    f64::from_bits(0x3fbe6f7bf29aa54b), // 0.11888861344291006
    f64::from_bits(0x3fbdd3b56176e88f), // 0.11651166562561087
    f64::from_bits(0x3fbd38abb9bd91e5), // 0.11414597782783849
    f64::from_bits(0x3fbc9e5f493b740a), // 0.11179156816383809
    f64::from_bits(0x3fbc04d0680b1015), // 0.1094484571468118
    f64::from_bits(0x3fbb6bff78f2e233), // 0.1071166677746838
    f64::from_bits(0x3fbad3ece9caf633), // 0.10479622562248707
    f64::from_bits(0x3fba3c9933ea6286), // 0.10248715894193525
    f64::from_bits(0x3fb9a604dc9d5b19), // 0.10018949876881002
    f64::from_bits(0x3fb9103075a4a0ab), // 0.09790327903886246
    f64::from_bits(0x3fb87b1c9dbf2852), // 0.095628536713009
    f64::from_bits(0x3fb7e6ca013eefd6), // 0.09336531191269101
    f64::from_bits(0x3fb753395aaa1176), // 0.09111364806637376
    f64::from_bits(0x3fb6c06b73694a4c), // 0.08887359206827589
    f64::from_bits(0x3fb62e6124854d18), // 0.08664519445055807
    f64::from_bits(0x3fb59d1b577466a4), // 0.08442850957035347
    f64::from_bits(0x3fb50c9b06fa2bae), // 0.0822235958132029
    f64::from_bits(0x3fb47ce1401b2213), // 0.08003051581466307
    f64::from_bits(0x3fb3edef23269a86), // 0.07784933670209612
    f64::from_bits(0x3fb35fc5e4d93e70), // 0.07568013035892718
    f64::from_bits(0x3fb2d266cf9b3111), // 0.07352297371398132
    f64::from_bits(0x3fb245d344dd0d91), // 0.0713779490588904
    f64::from_bits(0x3fb1ba0cbe97897d), // 0.06924514439700676
    f64::from_bits(0x3fb12f14d0f2179d), // 0.0671246538277885
    f64::from_bits(0x3fb0a4ed2c159625), // 0.0650165779712429
    f64::from_bits(0x3fb01b979e30e497), // 0.06292102443775814
    f64::from_bits(0x3faf262c2b6c6e35), // 0.06083810834953988
    f64::from_bits(0x3fae16d547b25181), // 0.05876795292093374
    f64::from_bits(0x3fad092efeadf162), // 0.0567106901062029
    f64::from_bits(0x3fabfd3e0f282a2c), // 0.05466646132488892
    f64::from_bits(0x3faaf30790385f70), // 0.05263541827679219
    f64::from_bits(0x3fa9ea90f9295563), // 0.05061772386094778
    f64::from_bits(0x3fa8e3e02a68b5ab), // 0.04861355321586854
    f64::from_bits(0x3fa7defb77af271e), // 0.04662309490193038
    f64::from_bits(0x3fa6dbe9b398d064), // 0.044646552251294463
    f64::from_bits(0x3fa5dab23cf2add4), // 0.04268414491647446
    f64::from_bits(0x3fa4db5d0e11275d), // 0.04073611065594094
    f64::from_bits(0x3fa3ddf2ce98eecb), // 0.03880270740452615
    f64::from_bits(0x3fa2e27ce83df497), // 0.036884215688567305
    f64::from_bits(0x3fa1e9059f1f6abc), // 0.034980941461716125
    f64::from_bits(0x3fa0f1982e968011), // 0.03309321945857858
    f64::from_bits(0x3f9ff881d718a5c4), // 0.0312214171919203
    f64::from_bits(0x3f9e121adb828c75), // 0.02936593975813336
    f64::from_bits(0x3f9c301983cd091a), // 0.027527235669603113
    f64::from_bits(0x3f9a529f4e22ebf8), // 0.02570580400854891
    f64::from_bits(0x3f9879d1b600c10a), // 0.02390220330579588
    f64::from_bits(0x3f96a5daf40bbf82), // 0.02211706270730885
    f64::from_bits(0x3f94d6eaf2fbb064), // 0.02035109623004451
    f64::from_bits(0x3f930d388dab5e13), // 0.018605121275724622
    f64::from_bits(0x3f91490334603012), // 0.016880083152543142
    f64::from_bits(0x3f8f152a4f72dd49), // 0.01517708830793531
    f64::from_bits(0x3f8ba48d274f8fac), // 0.013497450601739867
    f64::from_bits(0x3f8841040d8da478), // 0.011842757857907879
    f64::from_bits(0x3f84eb96421acfe0), // 0.010214971439701459
    f64::from_bits(0x3f81a59229952f92), // 0.008616582769398726
    f64::from_bits(0x3f7ce160f8ec6837), // 0.007050875471373222
    f64::from_bits(0x3f769ea8d90cb85d), // 0.0055224032992509916
    f64::from_bits(0x3f708a1f03b0b1fd), // 0.0040379725933630236
    f64::from_bits(0x3f655f9f43c1b067), // 0.0026090727461021593
    f64::from_bits(0x3f54a605b6b9f70f), // 0.001260285930498598
];

pub(crate) const EXP_K: [u64; 256] = [
    0x001c5214272497c6,
    0x0000000000000000,
    0x00137d5bd79c317e,
    0x00186ef58e3f3c10,
    0x001a9bb7320eb0ae,
    0x001bd127f719447c,
    0x001c951d0f88651a,
    0x001d1bfe2d5c3972,
    0x001d7e5bd56b18b2,
    0x001dc934dd172c70,
    0x001e0409dfac9dc8,
    0x001e337b71d47836,
    0x001e5a8b177cb7a2,
    0x001e7b42096f046c,
    0x001e970daf08ae3e,
    0x001eaef5b14ef09e,
    0x001ec3bd07b46556,
    0x001ed5f6f08799ce,
    0x001ee614ae6e5688,
    0x001ef46eca361cd0,
    0x001f014b76ddd4a4,
    0x001f0ce313a796b6,
    0x001f176369f1f77a,
    0x001f20f20c452570,
    0x001f29ae1951a874,
    0x001f31b18fb95532,
    0x001f39125157c106,
    0x001f3fe2eb6e694c,
    0x001f463332d788fa,
    0x001f4c10bf1d3a0e,
    0x001f51874c5c3322,
    0x001f56a109c3ecc0,
    0x001f5b66d9099996,
    0x001f5fe08210d08c,
    0x001f6414dd445772,
    0x001f6809f6859678,
    0x001f6bc52a2b02e6,
    0x001f6f4b3d32e4f4,
    0x001f72a07190f13a,
    0x001f75c8974d09d6,
    0x001f78c71b045cc0,
    0x001f7b9f12413ff4,
    0x001f7e5346079f8a,
    0x001f80e63be21138,
    0x001f835a3dad9162,
    0x001f85b16056b912,
    0x001f87ed89b24262,
    0x001f8a10759374fa,
    0x001f8c1bba3d39ac,
    0x001f8e10cc45d04a,
    0x001f8ff102013e16,
    0x001f91bd968358e0,
    0x001f9377ac47afd8,
    0x001f95204f8b64da,
    0x001f96b878633892,
    0x001f98410c968892,
    0x001f99bae146ba80,
    0x001f9b26bc697f00,
    0x001f9c85561b717a,
    0x001f9dd759cfd802,
    0x001f9f1d6761a1ce,
    0x001fa058140936c0,
    0x001fa187eb3a3338,
    0x001fa2ad6f6bc4fc,
    0x001fa3c91ace0682,
    0x001fa4db5fee6aa2,
    0x001fa5e4aa4d097c,
    0x001fa6e55ee46782,
    0x001fa7dddca51ec4,
    0x001fa8ce7ce6a874,
    0x001fa9b793ce5fee,
    0x001faa9970adb858,
    0x001fab745e588232,
    0x001fac48a3740584,
    0x001fad1682bf9fe8,
    0x001fadde3b5782c0,
    0x001faea008f21d6c,
    0x001faf5c2418b07e,
    0x001fb012c25b7a12,
    0x001fb0c41681dff4,
    0x001fb17050b6f1fa,
    0x001fb2179eb2963a,
    0x001fb2ba2bdfa84a,
    0x001fb358217f4e18,
    0x001fb3f1a6c9be0c,
    0x001fb486e10cacd6,
    0x001fb517f3c793fc,
    0x001fb5a500c5fdaa,
    0x001fb62e2837fe58,
    0x001fb6b388c9010a,
    0x001fb7353fb50798,
    0x001fb7b368dc7da8,
    0x001fb82e1ed6ba08,
    0x001fb8a57b0347f6,
    0x001fb919959a0f74,
    0x001fb98a85ba7204,
    0x001fb9f861796f26,
    0x001fba633deee286,
    0x001fbacb2f41ec16,
    0x001fbb3048b49144,
    0x001fbb929caea4e2,
    0x001fbbf23cc8029e,
    0x001fbc4f39d22994,
    0x001fbca9a3e140d4,
    0x001fbd018a548f9e,
    0x001fbd56fbde729c,
    0x001fbdaa068bd66a,
    0x001fbdfab7cb3f40,
    0x001fbe491c7364de,
    0x001fbe9540c9695e,
    0x001fbedf3086b128,
    0x001fbf26f6de6174,
    0x001fbf6c9e828ae2,
    0x001fbfb031a904c4,
    0x001fbff1ba0ffdb0,
    0x001fc03141024588,
    0x001fc06ecf5b54b2,
    0x001fc0aa6d8b1426,
    0x001fc0e42399698a,
    0x001fc11bf9298a64,
    0x001fc151f57d1942,
    0x001fc1861f770f4a,
    0x001fc1b87d9e74b4,
    0x001fc1e91620ea42,
    0x001fc217eed505de,
    0x001fc2450d3c83fe,
    0x001fc27076864fc2,
    0x001fc29a2f90630e,
    0x001fc2c23ce98046,
    0x001fc2e8a2d2c6b4,
    0x001fc30d654122ec,
    0x001fc33087de9c0e,
    0x001fc3520e0b7ec6,
    0x001fc371fadf66f8,
    0x001fc390512a2886,
    0x001fc3ad137497fa,
    0x001fc3c844013348,
    0x001fc3e1e4ccab40,
    0x001fc3f9f78e4da8,
    0x001fc4107db85060,
    0x001fc4257877fd68,
    0x001fc438e8b5bfc6,
    0x001fc44acf15112a,
    0x001fc45b2bf447e8,
    0x001fc469ff6c4504,
    0x001fc477495001b2,
    0x001fc483092bfbb8,
    0x001fc48d3e457ff6,
    0x001fc495e799d21a,
    0x001fc49d03dd30b0,
    0x001fc4a29179b432,
    0x001fc4a68e8e07fc,
    0x001fc4a8f8ebfb8c,
    0x001fc4a9ce16ea9e,
    0x001fc4a90b41fa34,
    0x001fc4a6ad4e28a0,
    0x001fc4a2b0c82e74,
    0x001fc49d11e62de2,
    0x001fc495cc852df4,
    0x001fc48cdc265ec0,
    0x001fc4823bec237a,
    0x001fc475e696dee6,
    0x001fc467d6817e82,
    0x001fc458059dc036,
    0x001fc4466d702e20,
    0x001fc433070bcb98,
    0x001fc41dcb0d6e0e,
    0x001fc406b196bbf6,
    0x001fc3edb248cb62,
    0x001fc3d2c43e593c,
    0x001fc3b5de0591b4,
    0x001fc396f599614c,
    0x001fc376005a4592,
    0x001fc352f3069370,
    0x001fc32dc1b22818,
    0x001fc3065fbd7888,
    0x001fc2dcbfcbf262,
    0x001fc2b0d3b99f9e,
    0x001fc2828c8ffcf0,
    0x001fc251da79f164,
    0x001fc21eacb6d39e,
    0x001fc1e8f18c6756,
    0x001fc1b09637bb3c,
    0x001fc17586dccd10,
    0x001fc137ae74d6b6,
    0x001fc0f6f6bb2414,
    0x001fc0b348184da4,
    0x001fc06c898baff0,
    0x001fc022a092f364,
    0x001fbfd5710f72b8,
    0x001fbf84dd29488e,
    0x001fbf30c52fc60a,
    0x001fbed907770cc6,
    0x001fbe7d80327dda,
    0x001fbe1e094ba614,
    0x001fbdba7a354408,
    0x001fbd52a7b9f826,
    0x001fbce663c6201a,
    0x001fbc757d2c4de4,
    0x001fbbffbf63b7aa,
    0x001fbb84f23fe6a2,
    0x001fbb04d9a0d18c,
    0x001fba7f351a70ac,
    0x001fb9f3bf92b618,
    0x001fb9622ed4abfc,
    0x001fb8ca33174a16,
    0x001fb82b76765b54,
    0x001fb7859c5b895c,
    0x001fb6d840d55594,
    0x001fb622f7d96942,
    0x001fb5654c6f37e0,
    0x001fb49ebfbf69d2,
    0x001fb3cec803e746,
    0x001fb2f4cf539c3e,
    0x001fb21032442852,
    0x001fb1203e5a9604,
    0x001fb0243042e1c2,
    0x001faf1b31c479a6,
    0x001fae045767e104,
    0x001facde9dbf2d72,
    0x001faba8e640060a,
    0x001faa61f399ff28,
    0x001fa908656f66a2,
    0x001fa79ab3508d3c,
    0x001fa61726d1f214,
    0x001fa47bd48bea00,
    0x001fa2c693c5c094,
    0x001fa0f4f47df314,
    0x001f9f04336bbe0a,
    0x001f9cf12b79f9bc,
    0x001f9ab84415abc4,
    0x001f98555b782fb8,
    0x001f95c3abd03f78,
    0x001f92fda9cef1f2,
    0x001f8ffcda9ae41c,
    0x001f8cb99e7385f8,
    0x001f892aec479606,
    0x001f8545f904db8e,
    0x001f80fdc336039a,
    0x001f7c427839e926,
    0x001f7700a3582acc,
    0x001f71200f1a241c,
    0x001f6a8234b7352a,
    0x001f630000a8e266,
    0x001f5a66904fe3c4,
    0x001f50724ece1172,
    0x001f44c7665c6fda,
    0x001f36e5a38a59a2,
    0x001f26143450340a,
    0x001f113e047b0414,
    0x001ef6aefa57cbe6,
    0x001ed38ca188151e,
    0x001ea2a61e122db0,
    0x001e5961c78b267c,
    0x001dddf62bac0bb0,
    0x001cdb4dd9e4e8c0,
];

pub(crate) const EXP_W: [f64; 256] = [
    f64::from_bits(0x3cd164ec94bf5dc1), // 9.655740063209183e-16
    f64::from_bits(0x3c60589d8b5d4119), // 7.089014243955414e-18
    f64::from_bits(0x3c6ad6b2495b4d2b), // 1.1639412496691224e-17
    f64::from_bits(0x3c719335a95b8dba), // 1.524391512353216e-17
    f64::from_bits(0x3c7522e6e54a2a73), // 1.833284885723744e-17
    f64::from_bits(0x3c785090fbc27a80), // 2.1089651094644866e-17
    f64::from_bits(0x3c7b38d1ef79b7cc), // 2.3611280778431382e-17
    f64::from_bits(0x3c7decd8b76dbd98), // 2.595595772310894e-17
    f64::from_bits(0x3c803bf049c65c3c), // 2.8161735541977523e-17
    f64::from_bits(0x3c8170db24d6f670), // 3.0255041303213823e-17
    f64::from_bits(0x3c82980290da2633), // 3.225508254836375e-17
    f64::from_bits(0x3c83b388fe3d6eca), // 3.417632340185027e-17
    f64::from_bits(0x3c84c515c60bfe21), // 3.6029969787344525e-17
    f64::from_bits(0x3c85cdf89d024ac3), // 3.782490776869649e-17
    f64::from_bits(0x3c86cf40f0a72bbd), // 3.956832198097553e-17
    f64::from_bits(0x3c87c9cdda17d019), // 4.1266117781759464e-17
    f64::from_bits(0x3c88be5954d3606f), // 4.2923218084425256e-17
    f64::from_bits(0x3c89ad80552237d2), // 4.4543777432823714e-17
    f64::from_bits(0x3c8a97c8be5d5203), // 4.613133981483186e-17
    f64::from_bits(0x3c8b7da5dddda3c4), // 4.768895725264636e-17
    f64::from_bits(0x3c8c5f7bd78c3f89), // 4.921928043727963e-17
    f64::from_bits(0x3c8d3da24df17c36), // 5.072462904503147e-17
    f64::from_bits(0x3c8e186678f1735a), // 5.220704702792672e-17
    f64::from_bits(0x3c8ef00ccf5f4faa), // 5.366834661718192e-17
    f64::from_bits(0x3c8fc4d25d683209), // 5.511014372835095e-17
    f64::from_bits(0x3c904b76ed6a7558), // 5.653388673239667e-17
    f64::from_bits(0x3c90b348479b80fc), // 5.794088004852767e-17
    f64::from_bits(0x3c9119f38749f5af), // 5.933230365208943e-17
    f64::from_bits(0x3c917f8ceb4bdfa0), // 6.07092293284718e-17
    f64::from_bits(0x3c91e426e93e49e7), // 6.207263431163193e-17
    f64::from_bits(0x3c9247d26538ff2e), // 6.342341280303077e-17
    f64::from_bits(0x3c92aa9ee123680b), // 6.476238575956142e-17
    f64::from_bits(0x3c930c9aa526da4b), // 6.609030925769405e-17
    f64::from_bits(0x3c936dd2e26d8202), // 6.740788167872722e-17
    f64::from_bits(0x3c93ce53d12162a0), // 6.871574991183812e-17
    f64::from_bits(0x3c942e28ca706748), // 7.00145147340393e-17
    f64::from_bits(0x3c948d5c5f35e712), // 7.130473549660643e-17
    f64::from_bits(0x3c94ebf86bcd0b93), // 7.258693422414648e-17
    f64::from_bits(0x3c954a0629786f4d), // 7.386159921381792e-17
    f64::from_bits(0x3c95a78e3db8befd), // 7.512918820723728e-17
    f64::from_bits(0x3c960498c7dd2ecf), // 7.639013119550826e-17
    f64::from_bits(0x3c96612d6d0c68e0), // 7.764483290797848e-17
    f64::from_bits(0x3c96bd5362faa944), // 7.88936750272979e-17
    f64::from_bits(0x3c971911797990bb), // 8.013701816675454e-17
    f64::from_bits(0x3c97746e23077973), // 8.137520364041762e-17
    f64::from_bits(0x3c97cf6f7c7e8172), // 8.260855505210038e-17
    f64::from_bits(0x3c982a1b53fed599), // 8.383737972539139e-17
    f64::from_bits(0x3c9884772f2be1ec), // 8.506196999385323e-17
    f64::from_bits(0x3c98de8850d0c52a), // 8.628260436784113e-17
    f64::from_bits(0x3c993853bdfda244), // 8.749954859216183e-17
    f64::from_bits(0x3c9991de42ad1338), // 8.871305660690252e-17
    f64::from_bits(0x3c99eb2c75ff03bf), // 8.992337142215357e-17
    f64::from_bits(0x3c9a4442be14884a), // 9.113072591597909e-17
    f64::from_bits(0x3c9a9d255396d261), // 9.233534356381788e-17
    f64::from_bits(0x3c9af5d844f224c9), // 9.353743910649129e-17
    f64::from_bits(0x3c9b4e5f794c979b), // 9.47372191631295e-17
    f64::from_bits(0x3c9ba6beb33f8f89), // 9.593488279457997e-17
    f64::from_bits(0x3c9bfef99359fe99), // 9.713062202221521e-17
    f64::from_bits(0x3c9c57139a70d29f), // 9.832462230649511e-17
    f64::from_bits(0x3c9caf102bc25adb), // 9.951706298915072e-17
    f64::from_bits(0x3c9d06f28ef0e6fb), // 1.0070811770242949e-16
    f64::from_bits(0x3c9d5ebdf1d86b8d), // 1.0189795474846941e-16
    f64::from_bits(0x3c9db6756a429057), // 1.030867374515422e-16
    f64::from_bits(0x3c9e0e1bf77c31fe), // 1.0427462448561886e-16
    f64::from_bits(0x3c9e65b483cf1044), // 1.0546177017945764e-16
    f64::from_bits(0x3c9ebd41e5e21b62), // 1.0664832480119147e-16
    f64::from_bits(0x3c9f14c6e202949f), // 1.0783443482419485e-16
    f64::from_bits(0x3c9f6c462b57feb5), // 1.0902024317583505e-16
    f64::from_bits(0x3c9fc3c26504a9a1), // 1.1020588947055781e-16
    f64::from_bits(0x3ca00d9f119a3cd9), // 1.1139151022861975e-16
    f64::from_bits(0x3ca0395df60db162), // 1.1257723908165675e-16
    f64::from_bits(0x3ca0651f1c7276f8), // 1.1376320696616847e-16
    f64::from_bits(0x3ca090e3bb4b0072), // 1.1494954230590093e-16
    f64::from_bits(0x3ca0bcad03710137), // 1.1613637118402183e-16
    f64::from_bits(0x3ca0e87c207a2f66), // 1.1732381750590458e-16
    f64::from_bits(0x3ca114523917ac15), // 1.1851200315326694e-16
    f64::from_bits(0x3ca140306f707dbe), // 1.1970104813034652e-16
    f64::from_bits(0x3ca16c17e1777ffb), // 1.2089107070273855e-16
    f64::from_bits(0x3ca19809a93d2396), // 1.2208218752947062e-16
    f64::from_bits(0x3ca1c406dd3d5283), // 1.2327451378884152e-16
    f64::from_bits(0x3ca1f01090a9c4e2), // 1.2446816329851125e-16
    f64::from_bits(0x3ca21c27d3b10e05), // 1.2566324863028985e-16
    f64::from_bits(0x3ca2484db3c2a329), // 1.2685988122003975e-16
    f64::from_bits(0x3ca274833bd0189f), // 1.2805817147307494e-16
    f64::from_bits(0x3ca2a0c9748bcdaa), // 1.2925822886541196e-16
    f64::from_bits(0x3ca2cd2164a53b5d), // 1.3046016204120288e-16
    f64::from_bits(0x3ca2f98c11031721), // 1.3166407890665726e-16
    f64::from_bits(0x3ca3260a7cfb7611), // 1.328700867207381e-16
    f64::from_bits(0x3ca3529daa8a1ba1), // 1.3407829218289994e-16
    f64::from_bits(0x3ca37f469a851af0), // 1.3528880151811755e-16
    f64::from_bits(0x3ca3ac064ccfeffc), // 1.3650172055943978e-16
    f64::from_bits(0x3ca3d8ddc08d336d), // 1.377171548282881e-16
    f64::from_bits(0x3ca405cdf44f09c4), // 1.389352096127064e-16
    f64::from_bits(0x3ca432d7e6466cd0), // 1.4015599004375715e-16
    f64::from_bits(0x3ca45ffc94716ca7), // 1.4137960117024852e-16
    f64::from_bits(0x3ca48d3cfcc883c4), // 1.4260614803196654e-16
    f64::from_bits(0x3ca4ba9a1d6b18a4), // 1.4383573573157902e-16
    f64::from_bits(0x3ca4e814f4cb45ea), // 1.4506846950536877e-16
    f64::from_bits(0x3ca515ae81d900fb), // 1.4630445479294757e-16
    f64::from_bits(0x3ca54367c42cb5f8), // 1.4754379730609516e-16
    f64::from_bits(0x3ca57141bc316f27), // 1.487866030968626e-16
    f64::from_bits(0x3ca59f3d6b4e9cf9), // 1.500329786250737e-16
    f64::from_bits(0x3ca5cd5bd4119335), // 1.5128303082535394e-16
    f64::from_bits(0x3ca5fb9dfa56cf26), // 1.5253686717381255e-16
    f64::from_bits(0x3ca62a04e3731a2e), // 1.537945957544997e-16
    f64::from_bits(0x3ca65891965c9b8c), // 1.5505632532575771e-16
    f64::from_bits(0x3ca687451bd3ebee), // 1.5632216538658375e-16
    f64::from_bits(0x3ca6b6207e8d3cdf), // 1.5759222624311761e-16
    f64::from_bits(0x3ca6e524cb59a608), // 1.5886661907536842e-16
    f64::from_bits(0x3ca714531150a9fb), // 1.6014545600429167e-16
    f64::from_bits(0x3ca743ac61fa041c), // 1.6142885015932787e-16
    f64::from_bits(0x3ca77331d177d130), // 1.6271691574651305e-16
    f64::from_bits(0x3ca7a2e476b1240a), // 1.640097681172718e-16
    f64::from_bits(0x3ca7d2c56b7d17f7), // 1.653075238380037e-16
    f64::from_bits(0x3ca802d5ccce7277), // 1.666103007605742e-16
    f64::from_bits(0x3ca83316badfe62a), // 1.6791821809382289e-16
    f64::from_bits(0x3ca86389596108e7), // 1.6923139647620223e-16
    f64::from_bits(0x3ca8942ecfa40f54), // 1.7054995804966298e-16
    f64::from_bits(0x3ca8c50848cc6094), // 1.7187402653490317e-16
    f64::from_bits(0x3ca8f616f3fe1513), // 1.7320372730810084e-16
    f64::from_bits(0x3ca9275c048e73e1), // 1.745391874792534e-16
    f64::from_bits(0x3ca958d8b235828a), // 1.7588053597224914e-16
    f64::from_bits(0x3ca98a8e3940bbf4), // 1.7722790360680065e-16
    f64::from_bits(0x3ca9bc7ddac7035d), // 1.7858142318237326e-16
    f64::from_bits(0x3ca9eea8dcdde951), // 1.7994122956424637e-16
    f64::from_bits(0x3caa21108ad0592d), // 1.8130745977185016e-16
    f64::from_bits(0x3caa53b63556c690), // 1.8268025306952523e-16
    f64::from_bits(0x3caa869b32d0f30f), // 1.8405975105985878e-16
    f64::from_bits(0x3caab9c0df81657a), // 1.8544609777975695e-16
    f64::from_bits(0x3caaed289dcaacff), // 1.8683943979941927e-16
    f64::from_bits(0x3cab20d3d66e8bb5), // 1.882399263243892e-16
    f64::from_bits(0x3cab54c3f8cf2542), // 1.8964770930086167e-16
    f64::from_bits(0x3cab88fa7b324fb6), // 1.9106294352443765e-16
    f64::from_bits(0x3cabbd78db072610), // 1.9248578675252438e-16
    f64::from_bits(0x3cabf2409d2dfd85), // 1.9391639982058994e-16
    f64::from_bits(0x3cac27534e42e02d), // 1.9535494676249091e-16
    f64::from_bits(0x3cac5cb282eab1a4), // 1.9680159493510374e-16
    f64::from_bits(0x3cac925fd82323fb), // 1.982565151475019e-16
    f64::from_bits(0x3cacc85cf395a56c), // 1.997198817949342e-16
    f64::from_bits(0x3cacfeab83ed7180), // 2.0119187299787347e-16
    f64::from_bits(0x3cad354d4130f2ad), // 2.0267267074641983e-16
    f64::from_bits(0x3cad6c43ed1ea3fe), // 2.0416246105035888e-16
    f64::from_bits(0x3cada391538da50a), // 2.0566143409519179e-16
    f64::from_bits(0x3caddb374ad2357f), // 2.071697844044737e-16
    f64::from_bits(0x3cae1337b426509b), // 2.0868771100881597e-16
    f64::from_bits(0x3cae4b947c16a452), // 2.1021541762192928e-16
    f64::from_bits(0x3cae844f9af4237f), // 2.117531128241076e-16
    f64::from_bits(0x3caebd6b154a7678), // 2.133010102535779e-16
    f64::from_bits(0x3caef6e8fc5b9168), // 2.1485932880616633e-16
    f64::from_bits(0x3caf30cb6ea0bc7f), // 2.1642829284376047e-16
    f64::from_bits(0x3caf6b1498515ed0), // 2.180081324120784e-16
    f64::from_bits(0x3cafa5c6b3efe1e5), // 2.1959908346828707e-16
    f64::from_bits(0x3cafe0e40add09d8), // 2.212013881190496e-16
    f64::from_bits(0x3cb00e377af911d4), // 2.2281529486961805e-16
    f64::from_bits(0x3cb02c34ef11391b), // 2.2444105888463086e-16
    f64::from_bits(0x3cb04a6b9e9224a3), // 2.2607894226131737e-16
    f64::from_bits(0x3cb068dccf1126db), // 2.277292143158621e-16
    f64::from_bits(0x3cb08789cf3aad0f), // 2.2939215188373114e-16
    f64::from_bits(0x3cb0a673f733c819), // 2.3106803963482133e-16
    f64::from_bits(0x3cb0c59ca900946f), // 2.3275717040435346e-16
    f64::from_bits(0x3cb0e50550efcfb7), // 2.344598455404958e-16
    f64::from_bits(0x3cb104af660befce), // 2.361763752697774e-16
    f64::from_bits(0x3cb1249c6a92154a), // 2.3790707908142767e-16
    f64::from_bits(0x3cb144cdec6f3a2b), // 2.3965228613186235e-16
    f64::from_bits(0x3cb1654585c404c1), // 2.4141233567062933e-16
    f64::from_bits(0x3cb18604dd6fae9e), // 2.431875774892256e-16
    f64::from_bits(0x3cb1a70da7a27820), // 2.44978372394307e-16
    f64::from_bits(0x3cb1c861a6782a5a), // 2.4678509270692887e-16
    f64::from_bits(0x3cb1ea02aa9b3370), // 2.4860812278958517e-16
    f64::from_bits(0x3cb20bf293f0f4a2), // 2.504478596029557e-16
    f64::from_bits(0x3cb22e33524fe550), // 2.523047132944217e-16
    f64::from_bits(0x3cb250c6e6403bba), // 2.541791078205812e-16
    f64::from_bits(0x3cb273af61c7daa6), // 2.560714816061771e-16
    f64::from_bits(0x3cb296eee942532b), // 2.579822882420531e-16
    f64::from_bits(0x3cb2ba87b445db51), // 2.599119972249747e-16
    f64::from_bits(0x3cb2de7c0e962d70), // 2.618610947423924e-16
    f64::from_bits(0x3cb302ce59265965), // 2.638300845054943e-16
    f64::from_bits(0x3cb327810b2aa7d0), // 2.658194886341845e-16
    f64::from_bits(0x3cb34c96b33bc965), // 2.678298485979525e-16
    f64::from_bits(0x3cb37211f88ca856), // 2.698617262169489e-16
    f64::from_bits(0x3cb397f59c345143), // 2.7191570472798185e-16
    f64::from_bits(0x3cb3be447a8d8b83), // 2.739923899205815e-16
    f64::from_bits(0x3cb3e5018cadded0), // 2.760924113487617e-16
    f64::from_bits(0x3cb40c2fe9f5eead), // 2.782164236246436e-16
    f64::from_bits(0x3cb433d2c9bd42f8), // 2.8036510780069835e-16
    f64::from_bits(0x3cb45bed851bc92c), // 2.825391728480253e-16
    f64::from_bits(0x3cb4848398d39432), // 2.847393572388174e-16
    f64::from_bits(0x3cb4ad98a75da14c), // 2.8696643064198177e-16
    f64::from_bits(0x3cb4d7307b1cb127), // 2.8922119574179956e-16
    f64::from_bits(0x3cb5014f08b99508), // 2.915044901905293e-16
    f64::from_bits(0x3cb52bf871acaab2), // 2.9381718870700286e-16
    f64::from_bits(0x3cb5573106f8a75a), // 2.9616020533454657e-16
    f64::from_bits(0x3cb582fd4c1b4461), // 2.9853449587300453e-16
    f64::from_bits(0x3cb5af61fa38e107), // 3.009410605012618e-16
    f64::from_bits(0x3cb5dc640388bd9e), // 3.0338094660850034e-16
    f64::from_bits(0x3cb60a0897081879), // 3.058552518544861e-16
    f64::from_bits(0x3cb63855247b2e94), // 3.08365127481531e-16
    f64::from_bits(0x3cb6674f60c3f432), // 3.1091178190342663e-16
    f64::from_bits(0x3cb696fd4a9748ee), // 3.134964845996663e-16
    f64::from_bits(0x3cb6c7652f9a7b1e), // 3.1612057034671057e-16
    f64::from_bits(0x3cb6f88db1f42507), // 3.187854438219713e-16
    f64::from_bits(0x3cb72a7dce5cd218), // 3.2149258462067974e-16
    f64::from_bits(0x3cb75d3ce2bd71c3), // 3.2424355273094516e-16
    f64::from_bits(0x3cb790d2b56b71f9), // 3.2703999451822404e-16
    f64::from_bits(0x3cb7c5477d1476d3), // 3.298836492772283e-16
    f64::from_bits(0x3cb7faa3e96e1412), // 3.3277635641716714e-16
    f64::from_bits(0x3cb830f12cc0bec3), // 3.357200633553244e-16
    f64::from_bits(0x3cb8683906687342), // 3.387168342045505e-16
    f64::from_bits(0x3cb8a085ce695bab), // 3.417688593525637e-16
    f64::from_bits(0x3cb8d9e2823b3695), // 3.448784660453424e-16
    f64::from_bits(0x3cb9145ad2f37544), // 3.4804813010374423e-16
    f64::from_bits(0x3cb94ffb34fc2a0e), // 3.5128048892229794e-16
    f64::from_bits(0x3cb98cd0f18d1ad8), // 3.545783559224792e-16
    f64::from_bits(0x3cb9caea3a24d9ea), // 3.5794473666042765e-16
    f64::from_bits(0x3cba0a563e49f178), // 3.6138284682190606e-16
    f64::from_bits(0x3cba4b2543e84c3b), // 3.6489613237645425e-16
    f64::from_bits(0x3cba8d68c2ad86ea), // 3.6848829220956213e-16
    f64::from_bits(0x3cbad13382d845c4), // 3.7216330360802073e-16
    f64::from_bits(0x3cbb1699c003b60a), // 3.7592545104162565e-16
    f64::from_bits(0x3cbb5db15091ea0f), // 3.7977935876688744e-16
    f64::from_bits(0x3cbba691d276da5e), // 3.8373002787892137e-16
    f64::from_bits(0x3cbbf154de4bef77), // 3.8778287856078953e-16
    f64::from_bits(0x3cbc3e1641c2e0a7), // 3.919437984311429e-16
    f64::from_bits(0x3cbc8cf442c8c8f4), // 3.962191980786775e-16
    f64::from_bits(0x3cbcde0fecf2a97f), // 4.0061607510565417e-16
    f64::from_bits(0x3cbd318d6b2738c5), // 4.051420882956573e-16
    f64::from_bits(0x3cbd87946fec3bec), // 4.0980564389030625e-16
    f64::from_bits(0x3cbde050af4ef19f), // 4.1461599642909046e-16
    f64::from_bits(0x3cbe3bf26e190960), // 4.195833672073399e-16
    f64::from_bits(0x3cbe9aaf2af383c1), // 4.247190841824385e-16
    f64::from_bits(0x3cbefcc26750ea4a), // 4.3003574816674707e-16
    f64::from_bits(0x3cbf626e9791f7a7), // 4.355474314693952e-16
    f64::from_bits(0x3cbfcbfe43f6c6e5), // 4.41269916903607e-16
    f64::from_bits(0x3cc01ce2b362ec2e), // 4.472209874259932e-16
    f64::from_bits(0x3cc056118bf58eef), // 4.534207798565834e-16
    f64::from_bits(0x3cc091c1cdcba54e), // 4.598922204905932e-16
    f64::from_bits(0x3cc0d031785d48a0), // 4.666615664711476e-16
    f64::from_bits(0x3cc111a8034392a6), // 4.737590853262492e-16
    f64::from_bits(0x3cc156786775442a), // 4.812199172829238e-16
    f64::from_bits(0x3cc19f03bcb3c2d6), // 4.89085182739221e-16
    f64::from_bits(0x3cc1ebbca0c9fa7c), // 4.97403423619194e-16
    f64::from_bits(0x3cc23d2bb659919f), // 5.06232507214416e-16
    f64::from_bits(0x3cc293f5ae49aaa5), // 5.156421828878083e-16
    f64::from_bits(0x3cc2f0e38a4411f0), // 5.257175802022275e-16
    f64::from_bits(0x3cc354ee27ccf75e), // 5.365640977112022e-16
    f64::from_bits(0x3cc3c14ec7c8b861), // 5.483144034258704e-16
    f64::from_bits(0x3cc4379766e41362), // 5.61138745467516e-16
    f64::from_bits(0x3cc4b9d7cd4751d1), // 5.752606481503332e-16
    f64::from_bits(0x3cc54ad83ccf73f6), // 5.909817641652103e-16
    f64::from_bits(0x3cc5ee7ae17313d2), // 6.087231416180908e-16
    f64::from_bits(0x3cc6aa676d4bbf72), // 6.290979034877557e-16
    f64::from_bits(0x3cc78750d6eac62f), // 6.530492053564041e-16
    f64::from_bits(0x3cc8939fe6f2ed19), // 6.821393079028929e-16
    f64::from_bits(0x3cc9e9dc0d487b85), // 7.192444966089362e-16
    f64::from_bits(0x3ccbc39e51da71fc), // 7.706095350032097e-16
    f64::from_bits(0x3ccec9d9297ebb83), // 8.545517038584027e-16
];

pub(crate) const EXP_F: [f64; 256] = [
    f64::from_bits(0x3ff0000000000000), // 1.0
    f64::from_bits(0x3fee0545e5881137), // 0.9381436808621747
    f64::from_bits(0x3fecd0a65081fff1), // 0.9004699299257465
    f64::from_bits(0x3febe5007beb7b27), // 0.8717043323812036
    f64::from_bits(0x3feb210f0ee67f2a), // 0.8477855006239896
    f64::from_bits(0x3fea76baa562fae7), // 0.8269932966430503
    f64::from_bits(0x3fe9de9715556d9b), // 0.8084216515230084
    f64::from_bits(0x3fe95431c455aa39), // 0.7915276369724956
    f64::from_bits(0x3fe8d4a376d3d22f), // 0.7759568520401156
    f64::from_bits(0x3fe85de87806c5b8), // 0.7614633888498963
    f64::from_bits(0x3fe7ee8a2d243126), // 0.7478686219851951
    f64::from_bits(0x3fe7856e9b09d47e), // 0.7350380924314235
    f64::from_bits(0x3fe721bb5ba94b63), // 0.722867659593572
    f64::from_bits(0x3fe6c2c3498418c6), // 0.711274760805076
    f64::from_bits(0x3fe667fa6d4f5c06), // 0.7001926550827882
    f64::from_bits(0x3fe610edc1a7af66), // 0.689566496117078
    f64::from_bits(0x3fe5bd3d694cac75), // 0.6793505722647654
    f64::from_bits(0x3fe56c9882da8773), // 0.6695063167319247
    f64::from_bits(0x3fe51eba1578899a), // 0.6600008410789997
    f64::from_bits(0x3fe4d366c151f8af), // 0.6508058334145711
    f64::from_bits(0x3fe48a6afb8ee069), // 0.6418967164272661
    f64::from_bits(0x3fe44399afa8e125), // 0.6332519942143661
    f64::from_bits(0x3fe3fecb2bb18b80), // 0.624852738703666
    f64::from_bits(0x3fe3bbdc44e1d114), // 0.6166821809152077
    f64::from_bits(0x3fe37aada708ddd9), // 0.608725382079622
    f64::from_bits(0x3fe33b23450e6318), // 0.6009689663652322
    f64::from_bits(0x3fe2fd23e345da5e), // 0.5934009016917334
    f64::from_bits(0x3fe2c098b61f4f24), // 0.586010318477268
    f64::from_bits(0x3fe2856d111132bd), // 0.578787358602845
    f64::from_bits(0x3fe24b8e228c50a3), // 0.5717230486648258
    f64::from_bits(0x3fe212eaba813ec8), // 0.5648091929124002
    f64::from_bits(0x3fe1db7319877b89), // 0.5580382822625874
    f64::from_bits(0x3fe1a518c71e3b25), // 0.5514034165406413
    f64::from_bits(0x3fe16fce6dce6fee), // 0.5448982376724396
    f64::from_bits(0x3fe13b87bc33169c), // 0.5385168720028619
    f64::from_bits(0x3fe108394a1cc38d), // 0.5322538802630433
    f64::from_bits(0x3fe0d5d8812b1e2b), // 0.5261042139836197
    f64::from_bits(0x3fe0a45b8854d02a), // 0.5200631773682336
    f64::from_bits(0x3fe073b931ee3b7d), // 0.5141263938147486
    f64::from_bits(0x3fe043e8ebd26548), // 0.5082897764106429
    f64::from_bits(0x3fe014e2b160f324), // 0.5025495018413477
    f64::from_bits(0x3fdfcd3dfe214576), // 0.49690198724154955
    f64::from_bits(0x3fdf722d8ebfc5fa), // 0.49134386959403253
    f64::from_bits(0x3fdf1886d1eb424d), // 0.4858719873418849
    f64::from_bits(0x3fdec03d4b969d90), // 0.4804833639304542
    f64::from_bits(0x3fde6945367dd351), // 0.4751751930373774
    f64::from_bits(0x3fde139375e137fc), // 0.46994482528396
    f64::from_bits(0x3fddbf1d88a7210c), // 0.4647897562504262
    f64::from_bits(0x3fdd6bd97db9ed7a), // 0.4597076156421377
    f64::from_bits(0x3fdd19bde97e1a0b), // 0.4546961574746155
    f64::from_bits(0x3fdcc8c1dc40e092), // 0.449753251162755
    f64::from_bits(0x3fdc78dcd983fb60), // 0.4448768734145485
    f64::from_bits(0x3fdc2a06d00ea583), // 0.4400651008423539
    f64::from_bits(0x3fdbdc3812aeeeb5), // 0.4353161032156366
    f64::from_bits(0x3fdb8f6951990b88), // 0.43062813728845883
    f64::from_bits(0x3fdb43939454806f), // 0.42599954114303434
    f64::from_bits(0x3fdaf8b03428ef5f), // 0.4214287289976166
    f64::from_bits(0x3fdaaeb8d6fdf6e5), // 0.4169141864330029
    f64::from_bits(0x3fda65a76aa30140), // 0.4124544659971612
    f64::from_bits(0x3fda1d76207521f4), // 0.4080481831520324
    f64::from_bits(0x3fd9d61f695a3792), // 0.4036940125305303
    f64::from_bits(0x3fd98f9df2097ba8), // 0.3993906844752311
    f64::from_bits(0x3fd949ec9f9a8110), // 0.39513698183329016
    f64::from_bits(0x3fd905068c545d04), // 0.3909317369847971
    f64::from_bits(0x3fd8c0e704b75d39), // 0.38677382908413765
    f64::from_bits(0x3fd87d8984bc3f8c), // 0.38266218149600983
    f64::from_bits(0x3fd83ae9b5446138), // 0.3785957594095808
    f64::from_bits(0x3fd7f90369b6ce59), // 0.37457356761590216
    f64::from_bits(0x3fd7b7d29dc6801e), // 0.370594648435146
    f64::from_bits(0x3fd77753735e72e3), // 0.36665807978151416
    f64::from_bits(0x3fd7378230b08dea), // 0.3627629733548178
    f64::from_bits(0x3fd6f85b3e649e9d), // 0.3589084729487498
    f64::from_bits(0x3fd6b9db25e4e99c), // 0.35509375286678746
    f64::from_bits(0x3fd67bfe8fc60d9f), // 0.35131801643748334
    f64::from_bits(0x3fd63ec2424827e4), // 0.347580494621637
    f64::from_bits(0x3fd602231fef5876), // 0.3438804447045024
    f64::from_bits(0x3fd5c61e2631ee6c), // 0.34021714906678
    f64::from_bits(0x3fd58ab06c3aa9ef), // 0.3365899140286776
    f64::from_bits(0x3fd54fd721bda3e7), // 0.332998068761809
    f64::from_bits(0x3fd5158f8dde89f5), // 0.3294409642641363
    f64::from_bits(0x3fd4dbd70e26f91d), // 0.3259179723935562
    f64::from_bits(0x3fd4a2ab158bdad3), // 0.32242848495608917
    f64::from_bits(0x3fd46a092b80beef), // 0.31897191284495724
    f64::from_bits(0x3fd431eeeb1841e2), // 0.31554768522712895
    f64::from_bits(0x3fd3fa5a0230a14e), // 0.31215524877417955
    f64::from_bits(0x3fd3c34830abb285), // 0.3087940669345602
    f64::from_bits(0x3fd38cb747b17def), // 0.30546361924459026
    f64::from_bits(0x3fd356a528fcd0dd), // 0.3021634006756935
    f64::from_bits(0x3fd3210fc6312435), // 0.2988929210155818
    f64::from_bits(0x3fd2ebf520394270), // 0.2956517042812612
    f64::from_bits(0x3fd2b75346ae2262), // 0.2924392881618926
    f64::from_bits(0x3fd2832857457629), // 0.28925522348967775
    f64::from_bits(0x3fd24f727d4776fd), // 0.2860990737370768
    f64::from_bits(0x3fd21c2ff10b7eff), // 0.28297041453878075
    f64::from_bits(0x3fd1e95ef77b09db), // 0.2798688332369729
    f64::from_bits(0x3fd1b6fde19abc5a), // 0.27679392844851736
    f64::from_bits(0x3fd1850b0c191982), // 0.27374530965280297
    f64::from_bits(0x3fd15384dee291ef), // 0.27072259679906
    f64::from_bits(0x3fd12269ccba9fba), // 0.2677254199320448
    f64::from_bits(0x3fd0f1b852d9a66c), // 0.2647534188350622
    f64::from_bits(0x3fd0c16ef88f5333), // 0.261806242689363
    f64::from_bits(0x3fd0918c4ee93e13), // 0.25888354974901623
    f64::from_bits(0x3fd0620ef05d90d2), // 0.2559850070304154
    f64::from_bits(0x3fd032f580797c2c), // 0.25311029001562946
    f64::from_bits(0x3fd0043eab93476a), // 0.2502590823688623
    f64::from_bits(0x3fcfabd24cff9354), // 0.24743107566532763
    f64::from_bits(0x3fcf4fe75c963e7e), // 0.2446259691318921
    f64::from_bits(0x3fcef4ba0fe8e09b), // 0.24184346939887721
    f64::from_bits(0x3fce9a48005940f2), // 0.23908329026244918
    f64::from_bits(0x3fce408ed62f83a7), // 0.23634515245705964
    f64::from_bits(0x3fcde78c48224f39), // 0.23362878343743335
    f64::from_bits(0x3fcd8f3e1ae3eeb8), // 0.2309339171696274
    f64::from_bits(0x3fcd37a220b431fd), // 0.2282602939307167
    f64::from_bits(0x3fcce0b638f6d09f), // 0.22560766011668407
    f64::from_bits(0x3fcc8a784fce1802), // 0.2229757680581202
    f64::from_bits(0x3fcc34e65db9afee), // 0.2203643758433595
    f64::from_bits(0x3fcbdffe67394435), // 0.21777324714870053
    f64::from_bits(0x3fcb8bbe7c72e4a5), // 0.21520215107537868
    f64::from_bits(0x3fcb3824b8dcef3e), // 0.21265086199297828
    f64::from_bits(0x3fcae52f42eb5b0b), // 0.21011915938898826
    f64::from_bits(0x3fca92dc4bc03c49), // 0.20760682772422204
    f64::from_bits(0x3fca412a0edf5cbc), // 0.2051136562938377
    f64::from_bits(0x3fc9f016d1e4c512), // 0.20263943909370902
    f64::from_bits(0x3fc99fa0e43e1623), // 0.20018397469191127
    f64::from_bits(0x3fc94fc69ee692a1), // 0.19774706610509887
    f64::from_bits(0x3fc900866425bb79), // 0.19532852067956322
    f64::from_bits(0x3fc8b1de9f5062d5), // 0.19292814997677135
    f64::from_bits(0x3fc863cdc48c1af9), // 0.1905457696631954
    f64::from_bits(0x3fc816525094e7e6), // 0.18818119940425432
    f64::from_bits(0x3fc7c96ac8851bae), // 0.1858342627621971
    f64::from_bits(0x3fc77d15b99f46fe), // 0.18350478709776746
    f64::from_bits(0x3fc73151b91a2839), // 0.1811926034754963
    f64::from_bits(0x3fc6e61d63ee84ea), // 0.1788975465724783
    f64::from_bits(0x3fc69b775ea6da28), // 0.17661945459049488
    f64::from_bits(0x3fc6515e5530d1ac), // 0.1743581691713535
    f64::from_bits(0x3fc607d0fab06a31), // 0.17211353531532006
    f64::from_bits(0x3fc5bece0954c2b6), // 0.16988540130252766
    f64::from_bits(0x3fc57654422e78f5), // 0.1676736186172502
    f64::from_bits(0x3fc52e626d078c49), // 0.165478041874936
    f64::from_bits(0x3fc4e6f7583cb6fa), // 0.16329852875190182
    f64::from_bits(0x3fc4a011d8983096), // 0.16113493991759203
    f64::from_bits(0x3fc459b0c92dccc6), // 0.1589871389693142
    f64::from_bits(0x3fc413d30b386a9a), // 0.15685499236936523
    f64::from_bits(0x3fc3ce7785f8a905), // 0.15473836938446808
    f64::from_bits(0x3fc3899d2694d5c9), // 0.15263714202744286
    f64::from_bits(0x3fc34542dffa0caf), // 0.1505511850010399
    f64::from_bits(0x3fc30167aabe7d6e), // 0.1484803756438668
    f64::from_bits(0x3fc2be0a8504cf34), // 0.14642459387834494
    f64::from_bits(0x3fc27b2a72609940), // 0.14438372216063478
    f64::from_bits(0x3fc238c67bbbe878), // 0.1423576454324722
    f64::from_bits(0x3fc1f6ddaf3dca65), // 0.14034625107486245
    f64::from_bits(0x3fc1b56f2031d666), // 0.1383494288635802
    f64::from_bits(0x3fc17479e6f0ae78), // 0.13636707092642886
    f64::from_bits(0x3fc133fd20c9712f), // 0.13439907170221363
    f64::from_bits(0x3fc0f3f7efec1720), // 0.13244532790138752
    f64::from_bits(0x3fc0b4697b54b62f), // 0.13050573846833077
    f64::from_bits(0x3fc07550eeb7a5be), // 0.12858020454522817
    f64::from_bits(0x3fc036ad7a6e7f04), // 0.12666862943751067
    f64::from_bits(0x3fbff0fca6cbea8d), // 0.12477091858083096
    f64::from_bits(0x3fbf758566190414), // 0.12288697950954514
    f64::from_bits(0x3fbefaf3ae83c33c), // 0.12101672182667483
    f64::from_bits(0x3fbe8146048eb9cc), // 0.11916005717532768
    f64::from_bits(0x3fbe087af561bafb), // 0.11731689921155557
    f64::from_bits(0x3fbd909116ad9398), // 0.11548716357863353
    f64::from_bits(0x3fbd198706914dd7), // 0.11367076788274431
    f64::from_bits(0x3fbca35b6b80fd57), // 0.1118676316700563
    f64::from_bits(0x3fbc2e0cf42e10af), // 0.11007767640518538
    f64::from_bits(0x3fbbb99a5771268f), // 0.1083008254510338
    f64::from_bits(0x3fbb460254356548), // 0.10653700405000166
    f64::from_bits(0x3fbad343b1655465), // 0.10478613930657017
    f64::from_bits(0x3fba615d3dd938b7), // 0.10304816017125772
    f64::from_bits(0x3fb9f04dd046f428), // 0.10132299742595363
    f64::from_bits(0x3fb9801447336b70), // 0.09961058367063713
    f64::from_bits(0x3fb910af88e574b9), // 0.0979108533114922
    f64::from_bits(0x3fb8a21e835a533b), // 0.0962237425504328
    f64::from_bits(0x3fb834602c3bc4ba), // 0.09454918937605586
    f64::from_bits(0x3fb7c77380d7a6f3), // 0.09288713355604354
    f64::from_bits(0x3fb75b5786193c1e), // 0.09123751663104016
    f64::from_bits(0x3fb6f00b488416b6), // 0.08960028191003286
    f64::from_bits(0x3fb6858ddc30b620), // 0.08797537446727022
    f64::from_bits(0x3fb61bde5ccadef7), // 0.08636274114075691
    f64::from_bits(0x3fb5b2fbed91bb3e), // 0.08476233053236812
    f64::from_bits(0x3fb54ae5b959d036), // 0.08317409300963238
    f64::from_bits(0x3fb4e39af290d929), // 0.08159798070923742
    f64::from_bits(0x3fb47d1ad343985c), // 0.0800339475423199
    f64::from_bits(0x3fb417649d25b10e), // 0.07848194920160642
    f64::from_bits(0x3fb3b277999b9f9e), // 0.0769419431704805
    f64::from_bits(0x3fb34e5319c6e718), // 0.07541388873405841
    f64::from_bits(0x3fb2eaf676948dd1), // 0.07389774699236475
    f64::from_bits(0x3fb2886110ce0570), // 0.07239348087570874
    f64::from_bits(0x3fb22692512c9d8c), // 0.07090105516237183
    f64::from_bits(0x3fb1c589a86fa340), // 0.06942043649872875
    f64::from_bits(0x3fb165468f755392), // 0.0679515934219366
    f64::from_bits(0x3fb105c88756ca50), // 0.06649449638533977
    f64::from_bits(0x3fb0a70f19871b3b), // 0.06504911778675375
    f64::from_bits(0x3fb04919d7f5c817), // 0.06361543199980733
    f64::from_bits(0x3fafd7d0ba699676), // 0.062193415408540995
    f64::from_bits(0x3faf1ef49944e834), // 0.06078304644547963
    f64::from_bits(0x3fae679ea52eb2e5), // 0.059384305633420266
    f64::from_bits(0x3fadb1ce49315810), // 0.05799717563120066
    f64::from_bits(0x3facfd83031e794a), // 0.05662164128374288
    f64::from_bits(0x3fac4abc640721e9), // 0.05525768967669704
    f64::from_bits(0x3fab997a10bed985), // 0.05390531019604609
    f64::from_bits(0x3faae9bbc26a8084), // 0.05256449459307169
    f64::from_bits(0x3faa3b81471bf138), // 0.05123523705512628
    f64::from_bits(0x3fa98eca827b7c4c), // 0.04991753428270637
    f64::from_bits(0x3fa8e3976e80776d), // 0.0486113855733795
    f64::from_bits(0x3fa839e81c3a396b), // 0.04731679291318155
    f64::from_bits(0x3fa791bcb4ab089e), // 0.04603376107617517
    f64::from_bits(0x3fa6eb1579b6af52), // 0.04476229773294328
    f64::from_bits(0x3fa645f2c726a041), // 0.04350241356888818
    f64::from_bits(0x3fa5a25513c5d2ca), // 0.042254122413316234
    f64::from_bits(0x3fa5003cf296c5eb), // 0.04101744138041482
    f64::from_bits(0x3fa45fab14266b19), // 0.039792391023374125
    f64::from_bits(0x3fa3c0a047ff18ff), // 0.03857899550307486
    f64::from_bits(0x3fa3231d7e3f14ae), // 0.03737728277295936
    f64::from_bits(0x3fa28723c956c00c), // 0.03618728478193142
    f64::from_bits(0x3fa1ecb45ff312d4), // 0.03500903769739741
    f64::from_bits(0x3fa153d09f19b3a1), // 0.03384258215087433
    f64::from_bits(0x3fa0bc7a0c7cd651), // 0.032687963508959535
    f64::from_bits(0x3fa026b2590dfaee), // 0.03154523217289361
    f64::from_bits(0x3f9f24f6c7af9890), // 0.030414443910466604
    f64::from_bits(0x3f9dffae7a517468), // 0.029295660224637393
    f64::from_bits(0x3f9cdd9054331b0c), // 0.028188948763978636
    f64::from_bits(0x3f9bbea150fa5870), // 0.0270943837809558
    f64::from_bits(0x3f9aa2e6e6924e9b), // 0.026012046645134217
    f64::from_bits(0x3f998a670f132a48), // 0.024942026419731783
    f64::from_bits(0x3f98752853ec9967), // 0.02388442051155817
    f64::from_bits(0x3f976331da87fc96), // 0.02283933540638524
    f64::from_bits(0x3f96548b72a24077), // 0.02180688750428358
    f64::from_bits(0x3f95493da6ab0251), // 0.020787204072578117
    f64::from_bits(0x3f944151ce87f0be), // 0.019780424338009743
    f64::from_bits(0x3f933cd225315d84), // 0.01878670074469603
    f64::from_bits(0x3f923bc9e1b93a32), // 0.01780620041091136
    f64::from_bits(0x3f913e4554725f5f), // 0.016839106826039948
    f64::from_bits(0x3f904452091e02f0), // 0.015885621839973163
    f64::from_bits(0x3f8e9bfdde89c7ce), // 0.014945968011691148
    f64::from_bits(0x3f8cb6b9146e2757), // 0.014020391403181938
    f64::from_bits(0x3f8ad8fa5542c92d), // 0.013109164931254991
    f64::from_bits(0x3f8902ea688fa7bd), // 0.012212592426255381
    f64::from_bits(0x3f8734b6e6aa74f5), // 0.011331013597834597
    f64::from_bits(0x3f856e930be416cb), // 0.010464810181029979
    f64::from_bits(0x3f83b0b8c1516f62), // 0.00961441364250221
    f64::from_bits(0x3f81fb69edb37671), // 0.008780314985808975
    f64::from_bits(0x3f804ef2295fd7f9), // 0.00796307743801704
    f64::from_bits(0x3f7d5751fa745dc5), // 0.007163353183634984
    f64::from_bits(0x3f7a23e9d4974836), // 0.006381905937319179
    f64::from_bits(0x3f77049f37ec3620), // 0.005619642207205483
    f64::from_bits(0x3f73fa97cee322fd), // 0.004877655983542392
    f64::from_bits(0x3f71073d69574043), // 0.004157295120833795
    f64::from_bits(0x3f6c58b381cd4b11), // 0.003460264777836904
    f64::from_bits(0x3f66d888f3a1feff), // 0.002788798793574076
    f64::from_bits(0x3f61946ba8e1a324), // 0.0021459677437189063
    f64::from_bits(0x3f592bb5540c3e25), // 0.0015362997803015724
    f64::from_bits(0x3f4fb20af78dfcb9), // 0.0009672692823271745
    f64::from_bits(0x3f3dc31c329f0b4b), // 0.00045413435384149677
];
