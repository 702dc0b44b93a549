// Generated by `rngpack zigtables --write`; do not edit.

pub(crate) const NORM_GAP_LO: [u128; 256] = [
    0x0,
    0xdbe6fecebdedd80000,
    0x368190a69f6eb60000,
    0x20767e9009d9ca0000,
    0x171662a22ef4f50000,
    0x11e9d93e3cf40f0000,
    0xea4079d181be38000,
    0xc630696de186a8000,
    0xabdc75082da0f8000,
    0x97ce14b25fdd38000,
    0x8805f86eb3e460000,
    0x7b48be767c8ff4000,
    0x70c969e9e44288000,
    0x67fd06547c2b90000,
    0x60856be8efa690000,
    0x5a1226d38edf8c000,
    0x5479224b7ae828000,
    0x4f92989c8a7230000,
    0x4b374f6dd84fd8000,
    0x475873f9cddaec000,
    0x43e03b95998238000,
    0x40bf85c7336f68000,
    0x3dea074d001c88000,
    0x3b5823797dd330000,
    0x38fa0a83c37d1a000,
    0x36d03111e10254000,
    0x34d2387a730f78000,
    0x32fb2260b43a7a000,
    0x3146ab6ebf377a000,
    0x2fb12a596f50fe000,
    0x2e3775a1da4df2000,
    0x2cd6ce86acb3d2000,
    0x2b8ccffd145714000,
    0x2a5760d21d0346000,
    0x2934a84adddcb0000,
    0x2824fee1096828000,
    0x272103d9230ea6000,
    0x262d5bfde2c2a4000,
    0x2548cca2361fd0000,
    0x246e7ca9f76ef2000,
    0x239d91c7d11134000,
    0x22d8efb58d73a4000,
    0x221df6472848fa000,
    0x216bf7156ca3c2000,
    0x20c253d42c7de8000,
    0x20207c81478058000,
    0x1f85edd13dd50b000,
    0x1ef22fd00283b6000,
    0x1e64d4ae5360b7000,
    0x1ddd77b523cff3000,
    0x1d5bbc59b33b06000,
    0x1ce0f5977c2152000,
    0xe6ea89c49ba10000000,
    0x3e9f0da07335380000000,
    0x7f34ac76c5c6600000000,
    0xbc1a699a9eb5480000000,
    0xf57a677dbbe7c80000000,
    0x12b95a27d8f11e00000000,
    0x15eab4d866fb7c00000000,
    0x18ef6132496bba00000000,
    0x1bcabdbf41fc6300000000,
    0x1e7fe12a59e17600000000,
    0x2111a0244b360c00000000,
    0x2382935c0d2a4a00000000,
    0x25d51d17d922c200000000,
    0x280b6e51ce94be00000000,
    0x2a278b5811927e00000000,
    0x2c2b4ff2d3d0ba00000000,
    0x2e1873205e443200000000,
    0x2ff08a6fb50eb800000000,
    0x31b50d028b3ebc00000000,
    0x3367564359b8cc00000000,
    0x3508a85597d88a00000000,
    0x369a2e48370fb400000000,
    0x381cfe12147f2a00000000,
    0x39921a5c8fb97000000000,
    0x3afa742483e76c00000000,
    0x3c56ec310a5f2a00000000,
    0x3da8546a7b2f6c00000000,
    0x3eef7110ae2a3400000000,
    0x402cf9d56632f000000000,
    0x41619add8f600c00000000,
    0x428df5ac18389000000000,
    0x43b2a1f842eff000000000,
    0x44d02e716bf08c00000000,
    0x45e72172a862f000000000,
    0x46f7f9a6ee02e800000000,
    0x48032e9ffd067800000000,
    0x490931612ad1bc00000000,
    0x4a0a6cdeb679b800000000,
    0x4b074672fccee800000000,
    0x4c001e4b49db9000000000,
    0x4cf54fcb4049bc00000000,
    0x4de731e965444000000000,
    0x4ed61784dc724c00000000,
    0x4fc24fb438461000000000,
    0x50ac260fc24fd400000000,
    0x5193e2f4d4c7f400000000,
    0x5279cbc6671a0800000000,
    0x535e232780923800000000,
    0x544129334e214800000000,
    0x55231bafff7e5c00000000,
    0x5604364007b50800000000,
    0x56e4b28f412ea000000000,
    0x57c4c87ce64df000000000,
    0x58a4ae44e8782c00000000,
    0x598498a4cdd48000000000,
    0x5a64bb002d2d4000000000,
    0x5b4547824858ac00000000,
    0x5c266f3e0008cc00000000,
    0x5d08624d02f08800000000,
    0x5deb4fec626e5000000000,
    0x5ecf6699747a9000000000,
    0x5fb4d42bafa6b800000000,
    0x609bc5ee86980000000000,
    0x618468bafb1e4400000000,
    0x626ee90ef7ca6400000000,
    0x635b73250802c800000000,
    0x644a330afeb9a800000000,
    0x653b54b7cd834800000000,
    0x662f0422091d3400000000,
    0x67256d55069bf000000000,
    0x681ebc85498a7000000000,
    0x691b1e26a4903000000000,
    0x6a1abf0043426400000000,
    0x6b1dcc41a1569000000000,
    0x6c24739774c29000000000,
    0x6d2ee3407495d400000000,
    0x6e3d4a2268e88c00000000,
    0x6f4fd7df426ef800000000,
    0x7066bceb36d7f000000000,
    0x71822aa22a640000000000,
    0x72a2535e8e260c00000000,
    0x73c76a8ffb48a000000000,
    0x74f1a4d304c08c00000000,
    0x7621380938f55c00000000,
    0x77565b7254afb800000000,
    0x789147c5efc1d000000000,
    0x79d2374ec90e3400000000,
    0x7b196605cd1cbc00000000,
    0x7c6711afb42e1c00000000,
    0x7dbb79fb27e47c00000000,
    0x7f16e0a02c597000000000,
    0x80798980ed6c6000000000,
    0x81e3baccc8bf0800000000,
    0x8355bd24cd0a1800000000,
    0x84cfdbc13f647000000000,
    0x8652649a66447000000000,
    0x87dda892c0b80800000000,
    0x8971fba3eddfa000000000,
    0x8b0fb50da11d0000000000,
    0x8cb72f87fbf34000000000,
    0x8e68c978c8a3a800000000,
    0x9024e52ae3f16800000000,
    0x91ebe90add670000000000,
    0x93be3fe56a926800000000,
    0x959c592b86421800000000,
    0x9786a939f33a0800000000,
    0x997da9a52dad7000000000,
    0x9b81d98c0af81000000000,
    0x9d93bded9ab9b800000000,
    0x9fb3e206fe54e000000000,
    0xa1e2d7b642db8800000000,
    0xa42137e4ff51d000000000,
    0xa66fa2fa8a4d4800000000,
    0xa8cec15645cdf800000000,
    0xab3f43d1ef0af800000000,
    0xadc1e44fde40d800000000,
    0xb057665192ed5000000000,
    0xb300979b2867a000000000,
    0xb5be50e2a3ab1000000000,
    0xb891768d6d295000000000,
    0xbb7af97cbdd18000000000,
    0xbe7bd7ea05915000000000,
    0xc1951e554f466800000000,
    0xc4c7e887f0f54800000000,
    0xc81562ab96da9800000000,
    0xcb7eca79fe298800000000,
    0xcf057085f8ea4800000000,
    0xd2aab9a0dcfa2000000000,
    0xd670206083cc7000000000,
    0xda5736c634c58800000000,
    0xde61a80d5df44000000000,
    0xe2913aa3d718e800000000,
    0xe6e7d25137a2f800000000,
    0xeb67729210ca6800000000,
    0xf012412d17a19000000000,
    0xf4ea8907f6cd6800000000,
    0xf9f2bd43b8812000000000,
    0xff2d7ca9370ae800000000,
    0x1049d956de337f000000000,
    0x10a46095bf717d000000000,
    0x1102a126aeddd0000000000,
    0x1164d27d4265f7000000000,
    0x11cb303b4aea8c000000000,
    0x1235fa94d62650000000000,
    0x12a576bf5ffa06000000000,
    0x1319ef6da5f6b9000000000,
    0x1393b559ca5c4f000000000,
    0x14131fdfbf41f4000000000,
    0x14988daa2ba0e0000000000,
    0x1524657473882f000000000,
    0x15b716e4c8fc30000000000,
    0x16511b81fb29a9000000000,
    0x16f2f7c8e2b71e000000000,
    0x179d3c665d96b9000000000,
    0x1850879b889037000000000,
    0x190d86d2b32969000000000,
    0x19d4f86d06c8c9000000000,
    0x1aa7add22d60e7000000000,
    0x1b868dcd0792b0000000000,
    0x1c729742ab4319000000000,
    0x1d6ce4538a519b000000000,
    0x1e76adf9cc2650000000000,
    0x1f91503bf431dd000000000,
    0x20be4f0fa77826000000000,
    0x21ff5c0ebc798a000000000,
    0x23565d282f1b96000000000,
    0x24c574802b9be8000000000,
    0x264f09be8d2b10000000000,
    0x27f5d51a82eda2000000000,
    0x29bcec85957516000000000,
    0x2ba7d371aafb70000000000,
    0x2dba8dce4ee096000000000,
    0x2ff9b703f95934000000000,
    0x326a9dec76b060000000000,
    0x351367113ef47c000000000,
    0x37fb36dc2e27d4000000000,
    0x3b2a65ec14944c000000000,
    0x3eaac2748f832a000000000,
    0x4287e28a029838000000000,
    0x46cf8c9549b310000000000,
    0x4b923d11f3def0000000000,
    0x50e3d36f0ceeb0000000000,
    0x56dc73d1eb3a64000000000,
    0x5d99b130ec3238000000000,
    0x65401bb8d5f2a0000000000,
    0x6dfd5c433a83dc000000000,
    0x780b19649e02a0000000000,
    0x83b301a01a5518000000000,
    0x91548827a9cad8000000000,
    0xa16d33a4a038a8000000000,
    0xb4a4e96c105000000000000,
    0xcbe091e65f7b90000000000,
    0xe85f28c477fca0000000000,
    0x10be88215aae520000000000,
    0x1391b5d6fe13400000000000,
    0x173f571face62c0000000000,
    0x1c2cce1d9dec6f0000000000,
    0x23036a14afd60a0000000000,
    0x2cf05b77ebec240000000000,
    0x3c38daaae4fcde0000000000,
    0x55bfd5328fb6440000000000,
    0x85ccd6f4e26ed80000000000,
    0xf3a1fbd29190e80000000000,
    0x262b178390d65000000000000,
];

pub(crate) const NORM_GAP_HI: [u128; 256] = [
    0x0,
    0x7ee3e908b94c8c000000000000,
    0x435220d8813e4000000000000,
    0x15c4b680e72e1c00000000000,
    0xa68b37453c9bb80000000000,
    0x5ff3f49f57ca8c0000000000,
    0x3db0e3f7d40baa0000000000,
    0x2aa26aafb179880000000000,
    0x1f02883c0eac8e0000000000,
    0x176dc48052621e0000000000,
    0x123a4e9b6a30310000000000,
    0xe83d629ac27478000000000,
    0xbc745d99a09400000000000,
    0x9b5216eb9d7f88000000000,
    0x81b028523bb2a8000000000,
    0x6d7bd8a5cb31f4000000000,
    0x5d4cad116a5f70000000000,
    0x5027162f279d24000000000,
    0x45575bfb743458000000000,
    0x3c5a6f17cc9b52000000000,
    0x34cefc0a8b1ffa000000000,
    0x2e6b8f3f3b9adc000000000,
    0x28f7eb11bc6954000000000,
    0x24486eed17d70c000000000,
    0x203adc54682ab0000000000,
    0x1cb4080bbba610000000000,
    0x199e2d863de0a4000000000,
    0x16e7b3b66ad6d7000000000,
    0x1482424d50ee80000000000,
    0x126210d64a0c29000000000,
    0x107d5ffb65fb25000000000,
    0xecc11dfc72ae7000000000,
    0xd4759a6715f06000000000,
    0xbe97c6cc4fe43000000000,
    0xaad9f8a41eb0d000000000,
    0x98fa0fe26c4ec000000000,
    0x88bf7bce43273800000000,
    0x79f9a213ba064000000000,
    0x6c7e92f9d9414c00000000,
    0x6029fa9a42203800000000,
    0x54dc42ab20beec00000000,
    0x4a79db2fbd950000000000,
    0x40eaa284d923b000000000,
    0x381966d92b31f800000000,
    0x2ff37c65bdf58400000000,
    0x286864b911e87400000000,
    0x216984406f020e00000000,
    0x1ae9e41a828e5100000000,
    0x14ddff94626b0400000000,
    0xf3ba087f833eb80000000,
    0x9f9e021a1dca600000000,
    0x51202a612602300000000,
    0x9d9a8bbef4e8c8000000,
    0x1bf520c2173fa2000,
    0x1b86d7676e0cf4000,
    0x1b1cc23603c9c4000,
    0x1ab6a78b890fd3000,
    0x1a5451df550031000,
    0x19f58f66eeacb4000,
    0x199a31c3ff8a14000,
    0x19420dba92bccb000,
    0x18ee85f6acade7000,
    0x189ad3a85632d8000,
    0x184cfb0df98c4b000,
    0x17febcc1245685000,
    0x17b48d166c3b02000,
    0x176e48b5684601000,
    0x172753c6f65c03000,
    0x16e41521b6083a000,
    0x16a2f46d327583000,
    0x1663dae5339931000,
    0x1626b313a23ef2000,
    0x15eb68b9337910000,
    0x15b1e8b8041497000,
    0x157a20fff4b659000,
    0x1544007c9c6ef2000,
    0x150f7704abf6bf000,
    0x14dd2c8c830966000,
    0x14aaeccea316bf000,
    0x147acfd187a6e6000,
    0x144d7c30af0fea000,
    0x141f59b9db82ad000,
    0x13f3330e5aa11a000,
    0x13c793af5f5c3a000,
    0x139e8c9819eb3c000,
    0x1375f8124c993c000,
    0x134dcde0ec8bd2000,
    0x13281c52092241000,
    0x1302c3353d85e0000,
    0x12ddbb6a614ea3000,
    0x12bb10e918a637000,
    0x1297f7a1702e90000,
    0x12767b3039fdaa000,
    0x1255e3c17ffc35000,
    0x12362ac23e6b85000,
    0x1217f95dd9f6fb000,
    0x11f93b3c689712000,
    0x11dbf8fadee180000,
    0x11bf7dabeef05e000,
    0x11a3c412c3451d000,
    0x1188c72d42cb85000,
    0x116e82314a4ab3000,
    0x1154f08a1145b6000,
    0x113c0dd5b76a00000,
    0x1123d5e2f7d06a000,
    0x110c44aeffa200000,
    0x10f5566365dbf6000,
    0x10e0629f6bc875000,
    0x10c953fe5ff03f000,
    0x10b439058ed94e000,
    0x109fb33309e86d000,
    0x108dc824c4013a000,
    0x10785ad807944e000,
    0x10658290121872000,
    0x105333ece5dc68000,
    0x10416c5e151a55000,
    0x10302970dc7167000,
    0x102016b59afe55000,
    0x100f283e5104bc000,
    0xfff659ec58f82800,
    0xff01eea9ae063000,
    0xfe15235085f1a000,
    0xfd2fda9982744800,
    0xfc51f8b72a24f800,
    0xfb7b634b6249b800,
    0xfaac015d9eb75800,
    0xf9eeb2485752d000,
    0xf92d75cc0d569800,
    0xf8682b0b3fa5e800,
    0xf7b4b81d7a18b800,
    0xf71e203de5613000,
    0xf66d2d93c7837000,
    0xf5c2da174b10c800,
    0xf52a2e23239b9000,
    0xf4980eb78f402800,
    0xf40c6f43531eb800,
    0xf38744574a423000,
    0xf31ee4df031f6000,
    0xf29023f4e8165000,
    0xf21e1d3349778000,
    0xf1b268600e156800,
    0xf16ee86de3b5c800,
    0xf0edde053a534800,
    0xf094fffa9cc75800,
    0xf04dc93b5ef56000,
    0xeff6051e2ddc7000,
    0xefafe66364b03000,
    0xef7b893f230cb000,
    0xef41f594e6fea000,
    0xef031101122c6000,
    0xeed600c43e048800,
    0xeeaf3e83b75f4800,
    0xee8ed0bf5b374800,
    0xee74bf2d95c14800,
    0xee6112c1a91dc000,
    0xee53d5b2a3f91000,
    0xee4d13830e027000,
    0xee4cd90954bf2800,
    0xee53347901dab800,
    0xee60356cc4d48000,
    0xee8617593b8a0800,
    0xee9482f9e19a3000,
    0xeeafcb6266648000,
    0xeee4654495ad3800,
    0xef0da37d45155800,
    0xef3df51be338e000,
    0xef81ee6e4a254000,
    0xefc0c860ab39d000,
    0xf00d58d4131ff000,
    0xf061835b62fd2800,
    0xf0bd6abb8db1c800,
    0xf12133efc3400800,
    0xf18d06447e29f000,
    0xf2078a82b5352000,
    0xf28a82fd99fcf800,
    0xf3026238fed97800,
    0xf39014912830f800,
    0xf42d66b9e9734000,
    0xf4c68f3967ef7000,
    0xf56fcab3bf314800,
    0xf622acc915927800,
    0xf6df77f418660800,
    0xf7a672a155ae4000,
    0xf877e76d23854800,
    0xf95425669c25c800,
    0xfa3b80582ac04800,
    0xfb2e51162ef5d000,
    0xfc2cf5d450ab9800,
    0xfd37d2822aa6c800,
    0xfe4f51300a41a000,
    0xff73e27c946d6800,
    0x100a5fe0c3d83a000,
    0x101f5333afaeec000,
    0x10334d8bdb29ad000,
    0x10492af17a59a2000,
    0x106003f6b12a63000,
    0x1077e2d20f4243000,
    0x1091cff346dfce000,
    0x10aade5b02cfd1000,
    0x10c61316f4dd39000,
    0x10e3428495ab31000,
    0x11002d03949cf6000,
    0x111f2fad6f1b63000,
    0x11412ddfc8c3bb000,
    0x11617249d34918000,
    0x1184d6b11f8db3000,
    0x11ab38e83a8c8e000,
    0x11d08b852a0042000,
    0x11f90989a3394d000,
    0x12236b6f2b4310000,
    0x124fccea080f21000,
    0x127f2fa71bc0c5000,
    0x12af096390913b000,
    0x12e31376bcfbca000,
    0x13181fc3a2caaf000,
    0x13502a898ab4a3000,
    0x138b65f5a73a00000,
    0x13c9b52af69b1f000,
    0x140b4ff21d0913000,
    0x145122038f3dcb000,
    0x1499647b2a66de000,
    0x14e66d4d2d07e0000,
    0x15381006008e83000,
    0x158e1ea704f16a000,
    0x15eb0f86365f32000,
    0x164a9e48512790000,
    0x16b2d66b8dc793000,
    0x171fce1cbecbaf000,
    0x17955caa17a841000,
    0x1812d9442fbe61000,
    0x1899199efe568a000,
    0x192987eab00e5b000,
    0x19c50ec4cee8bb000,
    0x1a6eb1ba0986c8000,
    0x1b22e0d8aed845000,
    0x1be94c421657c6000,
    0x1cc12269f18a00000,
    0x1dac0bde6854ce000,
    0x1eaf95d1e81e1a000,
    0x1fcfa783c2fefb000,
    0x210d2fef90cb58000,
    0x22719fbafbfe8e000,
    0x2402fe6b374982000,
    0x25ca986cbb0838000,
    0x27d48c72bab0e2000,
    0x2a327d4a138d62000,
    0x2cf5c94de0a25c000,
    0x3043b6ab7ef72a000,
    0x3440f2712aadb2000,
    0x39364318a23f2e000,
    0x3f8af5e0a6a38c000,
    0x47f086208465f4000,
    0x53ac9e84af37f8000,
    0x6561627752fd10000,
    0x83a08a6e1e6990000,
    0xc545c25ec97648000,
];

pub(crate) const EXP_GAP_LO: [u128; 256] = [
    0x0,
    0x82c3073696475000000000000,
    0x20d0bc5506ef1e00000000000,
    0xfb8d468930a7f80000000000,
    0x999c6980efe4d00000000000,
    0x6a5c20f62f6e3c0000000000,
    0x4f7be7007628400000000000,
    0x3e832b025969600000000000,
    0x32fdef2c2641f60000000000,
    0x2abf38548169ea0000000000,
    0x249a62cc6068940000000000,
    0x1fe07d1d9525ce0000000000,
    0x1c258fffa4d1760000000000,
    0x1923bfe012b25a0000000000,
    0x16ac0ed283f5bb0000000000,
    0x149dd50bcfdbc90000000000,
    0x12e1be8713bbed0000000000,
    0x1166ba82fb64950000000000,
    0x10200a78e05f860000000000,
    0xf03fd8405e6bd8000000000,
    0xe0b16b27928348000000000,
    0xd2f779326c1038000000000,
    0xc6c77742d9a740000000000,
    0xbbe5892ad92eb8000000000,
    0xb2211c57ab2878000000000,
    0xa95266cc7317b8000000000,
    0xa15887e291cae0000000000,
    0x9a181d6ec52700000000000,
    0x937a2dd3b24568000000000,
    0x8d6b50d9561128000000000,
    0x87db0776272c00000000000,
    0x82bb3718753178000000000,
    0x7dffc00d255f84000000000,
    0x799e28cffcceb4000000000,
    0x758d59a07d8a04000000000,
    0x71c564d9950bb4000000000,
    0x6e3f595fdf8f10000000000,
    0x6af51d17f28f14000000000,
    0x67e14dcd2113a4000000000,
    0x64ff274a47e5b0000000000,
    0x624a6daa4c94cc000000000,
    0x5fbf5b19f2b870000000000,
    0x5d5a906d3a5020000000000,
    0x5b190809b24e48000000000,
    0x58f80abfd5b4e8000000000,
    0x56f526406d2ba4000000000,
    0x550e24eb3c51b8000000000,
    0x534106bf28f220000000000,
    0x518bfb3efda9d0000000000,
    0x4fed5c25488bec000000000,
    0x4e63a8c800d1bc000000000,
    0x4ced82126074a0000000000,
    0x4b89a6ff16c8e4000000000,
    0x4a36f180cb84f8000000000,
    0x48f453c9a42bc8000000000,
    0x47c0d5e4a2b030000000000,
    0x469b9396455410000000000,
    0x4583ba7acdf0f4000000000,
    0x4478885a2f9a88000000000,
    0x437949ab104e98000000000,
    0x4285583ed7a41c000000000,
    0x419c1a11c6ed2c000000000,
    0x40bd003aa98dc4000000000,
    0x3fe785f6af4d28000000000,
    0x3f1b2fcdc6700a000000000,
    0x3e578acce09118000000000,
    0x3d9c2bd37fc6a2000000000,
    0x3ce8aef2aae4f6000000000,
    0x3c3cb6dafbc0a4000000000,
    0x3b97ec5884bb46000000000,
    0x3af9fddac7be32000000000,
    0x3a629f07c51806000000000,
    0x39d18858ac87b6000000000,
    0x394676bf763ab6000000000,
    0x38c12b546c4de4000000000,
    0x38416b0aa9f278000000000,
    0x37c6fe6b4abcf6000000000,
    0x3751b1561d6dc4000000000,
    0x36e152c7dfcca4000000000,
    0x3675b4a51a0f82000000000,
    0x360eab894b98fc000000000,
    0x35ac0e9a1df818000000000,
    0x354db75df0bc8c000000000,
    0x34f381960f5760000000000,
    0x349d4b1b66228e000000000,
    0x344af3be3d8f9a000000000,
    0x33fc5d286a1418000000000,
    0x33b16ac192f2b2000000000,
    0x336a0195c8070c000000000,
    0x3326083dd65c04000000000,
    0x32e566c971a392000000000,
    0x32a806aafa819e000000000,
    0x326dd2a4c17a6a000000000,
    0x3236b6b7a736b2000000000,
    0x3202a01301b19e000000000,
    0x31d17d05a3d1d4000000000,
    0x31a33cf01dae96000000000,
    0x3177d037dfc212000000000,
    0x314f283b47faac000000000,
    0x31293746b44648000000000,
    0x3105f08a3877e6000000000,
    0x30e548102d7db8000000000,
    0x30c732b47f4356000000000,
    0x30aba61c9062d8000000000,
    0x309298afc12fba000000000,
    0x307c01908a10ac000000000,
    0x3067d896322986000000000,
    0x30561646fa9d90000000000,
    0x3046b3d2cc249e000000000,
    0x3039ab0e4dee6e000000000,
    0x302ef66e945b00000000000,
    0x3026910504f446000000000,
    0x3020767bd00036000000000,
    0x301ca312b62f68000000000,
    0x301b139c1658d4000000000,
    0x301bc57a8e3ec0000000000,
    0x301eb69ebe16a6000000000,
    0x3023e58585f0f2000000000,
    0x302b51366b4f88000000000,
    0x3034f9427c6ce0000000000,
    0x3040ddc369e806000000000,
    0x304eff5aef655c000000000,
    0x305f5f329210c0000000000,
    0x3071fefb9603a8000000000,
    0x3086e0ef62c508000000000,
    0x309e07d00ece22000000000,
    0x30b776e9540476000000000,
    0x30d33211aac11a000000000,
    0x30f13dabe4854c000000000,
    0x31119ea8e2f1d8000000000,
    0x31345a89c9d928000000000,
    0x315977626690cc000000000,
    0x3180fbdbe1d4ba000000000,
    0x31aaef37e59142000000000,
    0x31d75954175fda000000000,
    0x320642adca0d32000000000,
    0x3237b466330f4a000000000,
    0x326bb846fc6c1a000000000,
    0x32a258c7343e5a000000000,
    0x32dba110a4c576000000000,
    0x33179d05a7b62e000000000,
    0x33565947725d4c000000000,
    0x3397e33cd65f50000000000,
    0x33dc49197bc082000000000,
    0x342399e5c7a806000000000,
    0x346de5872ac082000000000,
    0x34bb3cc92c573c000000000,
    0x350bb167206ea6000000000,
    0x355f5616565b52000000000,
    0x35b63e914dbcd6000000000,
    0x36107fa37f40c0000000000,
    0x366e2f3607a840000000000,
    0x36cf645d3dbdac000000000,
    0x373437673e01a4000000000,
    0x379cc1eb699d88000000000,
    0x38091edb065582000000000,
    0x38796a93145e44000000000,
    0x38edc2ef634bd4000000000,
    0x3966475eea9efc000000000,
    0x39e318f9bcf7b6000000000,
    0x3a645a9872c79c000000000,
    0x3aea30ed45d8a6000000000,
    0x3b74c29f2ba8b2000000000,
    0x3c043866a99c5e000000000,
    0x3c98bd2d048a82000000000,
    0x3d327e2d9e6e52000000000,
    0x3dd1ab19f50c6e000000000,
    0x3e7676404eff3c000000000,
    0x3f2114b54f1ec6000000000,
    0x3fd1be80d98d96000000000,
    0x4088aece787c6c000000000,
    0x414624218fc8a0000000000,
    0x420a608dadd110000000000,
    0x42d5a9f38ef2a4000000000,
    0x43a84a42f25e18000000000,
    0x44828fc1fea768000000000,
    0x4564cd5a9a3c94000000000,
    0x464f5aee3e0624000000000,
    0x474295b118b4d0000000000,
    0x483ee08cfa28f4000000000,
    0x4944a48d07e1fc000000000,
    0x4a545152fb2574000000000,
    0x4b6e5d96ff2f8c000000000,
    0x4c9347b33266a0000000000,
    0x4dc3963c33d3c8000000000,
    0x4effd8a7e33d44000000000,
    0x5048a804206144000000000,
    0x519ea7bf30a608000000000,
    0x53028683ca7af0000000000,
    0x5474ff2b189be8000000000,
    0x55f6d9c72d4338000000000,
    0x5788ecc8c74308000000000,
    0x592c1e43d81b34000000000,
    0x5ae1655640d750000000000,
    0x5ca9cbb55843e8000000000,
    0x5e866f66caeb10000000000,
    0x607884aaa39c38000000000,
    0x6281581ccf7afc000000000,
    0x64a2511537a6b4000000000,
    0x66dcf44f664860000000000,
    0x6932e6e2e29774000000000,
    0x6ba5f19836f670000000000,
    0x6e3804a73e2b5c000000000,
    0x70eb3bee4d3b8c000000000,
    0x73c1e3b40c5550000000000,
    0x76be7e08d0284c000000000,
    0x79e3c8e01e7670000000000,
    0x7d34c4ff0c8820000000000,
    0x80b4bde1e19f40000000000,
    0x846752c1162800000000000,
    0x885080e626aab0000000000,
    0x8c74af891e7f88000000000,
    0x90d8bd7c18ad58000000000,
    0x958210f6e452e0000000000,
    0x9a76a9e6bdff40000000000,
    0x9fbd373ae28e70000000000,
    0xa55d2fc1390a68000000000,
    0xab5eef46e38610000000000,
    0xb1cbd8da371650000000000,
    0xb8ae7f3eb2d1d8000000000,
    0xc012d4e6cde700000000000,
    0xc806651a8d4758000000000,
    0xd098985efb13b8000000000,
    0xd9db06be5d2570000000000,
    0xe3e1db47f25088000000000,
    0xeec44d0d808a10000000000,
    0xfa9d3322ba6b78000000000,
    0x1078bbac9859e20000000000,
    0x115b449304a36b0000000000,
    0x12541952e35e0f0000000000,
    0x1366609908949a0000000000,
    0x1495d864f9b0310000000000,
    0x15e6f9f192bab50000000000,
    0x175f2811d1da5b0000000000,
    0x1904eba97c30e80000000000,
    0x1ae0436c593ea00000000000,
    0x1cfb0e4cf62a900000000000,
    0x1f619b66733dab0000000000,
    0x22236f60ba91dc0000000000,
    0x255457774680860000000000,
    0x290def5faafbbc0000000000,
    0x2d71d4cbc8527e0000000000,
    0x32ace78dc48dc80000000000,
    0x38fc348c87caa60000000000,
    0x40b49b75e1242c0000000000,
    0x4a4f140f663ba80000000000,
    0x567d18d94f23180000000000,
    0x664c17b0db74340000000000,
    0x7b66218addf2240000000000,
    0x988f5a3a4e85400000000000,
    0xc2ac08ac1532f00000000000,
    0x1031a3a257728e00000000000,
    0x16dccbf1442ded00000000000,
    0x2341ad83042c6000000000000,
    0x3ef851a4980f1e00000000000,
    0x96e96f1a6072e000000000000,
];

pub(crate) const EXP_GAP_HI: [u128; 256] = [
    0x0,
    0x1b7cdfd9d7bdbb00000,
    0xabf0c41c2f39300000,
    0x67fe7c6b6cb2f80000,
    0x4a1b5d621a3ae40000,
    0x397d90f9086dae0000,
    0x2ef85926a134280000,
    0x27bb3fb137449c0000,
    0x227347813152e40000,
    0x1e6e8c1b336cf10000,
    0x1b455e660cced90000,
    0x18b94ef1665a920000,
    0x16a074d6f904fb0000,
    0x14ded4787f96350000,
    0x1360cfc3c3c4130000,
    0x12183f00c95a960000,
    0x10faaa95d9c1e80000,
    0x1000a11367ab6c0000,
    0xf231ee77d6ab20000,
    0xe5d6a7cc317690000,
    0xdaca45084218d8000,
    0xd0d51c2701a508000,
    0xc7cfd894095cb0000,
    0xbf9a340dcd6398000,
    0xb82006b5e08b30000,
    0xb13dc0405a33f0000,
    0xaae0d3f5532c38000,
    0xa50639f1071058000,
    0x9f99da71306120000,
    0x9a96407df5e400000,
    0x95e4d8f7f859c0000,
    0x91832bf39f00a8000,
    0x8d699843e2df58000,
    0x898b6c67519388000,
    0x85eed728f52480000,
    0x82889869126310000,
    0x7f541553675b30000,
    0x7c4d3514b081b8000,
    0x79704f69f4845c000,
    0x76ba1debc2623c000,
    0x7427af98a608fc000,
    0x71bc173d5dfbec000,
    0x6f63c558a962b0000,
    0x6d30904dacdf64000,
    0x6b1519170de164000,
    0x69126f00635dd8000,
    0x6726f0b3e28c5c000,
    0x655120f116056c000,
    0x638fa2bc1b3fe8000,
    0x61de6f90186d60000,
    0x6044b4bf2a0ad8000,
    0x5eb64da758de90000,
    0x5d3a8e20cd73f4000,
    0x5bd08a907c8df0000,
    0x5a71eddbf58640000,
    0x5920b37e1a6284000,
    0x57dc2461e7da38000,
    0x56a3967a82b568000,
    0x55766ba0560764000,
    0x5454108c268a58000,
    0x53394493aa82a8000,
    0x522af6effa1924000,
    0x512b63b9fcabf0000,
    0x5029d6bffcc984000,
    0x4f38e03d495ad4000,
    0x4e4ffbff7b3000000,
    0x4d6c197ac529ec000,
    0x4c8f97015915b0000,
    0x4bb76ed424a018000,
    0x4ae8bc98c69518000,
    0x4a2083be1f3c88000,
    0x495bcbc0e15020000,
    0x489fbce4569428000,
    0x47e9663c6e86a0000,
    0x473df8ee721904000,
    0x46926aaaddf994000,
    0x45e93bbc4f7810000,
    0x4547a758cb6038000,
    0x44a8126f0fc02c000,
    0x440fbf701b64f0000,
    0x437e8719b15900000,
    0x42eed1436c7418000,
    0x4265eb5305c980000,
    0x41d8c676768930000,
    0x4154e6e939a7dc000,
    0x40d7751dd489ac000,
    0x4058197df98530000,
    0x3fe1b02dfacf76000,
    0x3f6be0f5f2e39a000,
    0x3ef68da437b790000,
    0x3e89e5397b7bb2000,
    0x3e204d3aa26b34000,
    0x3db159aad782d4000,
    0x3d4ad21d1c37c8000,
    0x3ce7169aabf2a0000,
    0x3c861346d113bc000,
    0x3c27b529a83066000,
    0x3bceb9d2ca03a2000,
    0x3b75727c6f3350000,
    0x3b1e9c739eedcc000,
    0x3aca27e8f944fa000,
    0x3a752e1ae75284000,
    0x3a282785af6f1a000,
    0x39dd5b6af9d166000,
    0x398f003b96cdf2000,
    0x39459d578bbf46000,
    0x39012daf3c4e7a000,
    0x38ba6f6fb04476000,
    0x3874346258c04a000,
    0x3832cde46ca068000,
    0x37f34c6b115234000,
    0x37b5a6577f7dfe000,
    0x377cc540e054ca000,
    0x373fc80cdaf620000,
    0x37077eb235f0f4000,
    0x36cf70a54fae8a000,
    0x369d8ef8d70c66000,
    0x366bdce3c951dc000,
    0x363749e49d05ec000,
    0x3608d99ade7c9a000,
    0x35d8f79239aa4c000,
    0x35adb1db4b51fe000,
    0x357f5ec5d4e984000,
    0x3558b6a6e6b9f6000,
    0x352eefbc445d4e000,
    0x35082fe38b160c000,
    0x34e2e7900d4e8e000,
    0x34bf1293aeb542000,
    0x349b1856422dac000,
    0x347a1c81eb385a000,
    0x345dba9fbceff0000,
    0x343f9091719108000,
    0x3422c8e2c11700000,
    0x340760ec202dc6000,
    0x33ed5643b0d2c0000,
    0x33d15ee6c56a86000,
    0x33bd506663779c000,
    0x33a40027c56f4a000,
    0x338f52634f7b56000,
    0x337da6f8868c7e000,
    0x3369f3da472450000,
    0x335ca70ba3a914000,
    0x3349e110ec065a000,
    0x333d8b25607558000,
    0x3330d1a897f9de000,
    0x33256a4ffea3e8000,
    0x331d165b2a9fbe000,
    0x331293d6db0eb8000,
    0x330b2635b66a22000,
    0x3306d7b5c2d39c000,
    0x330218e783527c000,
    0x32fb117b1820ca000,
    0x32fca5bef3c45c000,
    0x32fdcc83f622b8000,
    0x32fac91fccc55a000,
    0x32fcd52bcb4e82000,
    0x330227219b10b6000,
    0x3307028434e924000,
    0x330d48fd396e72000,
    0x3314fe6a6b4eba000,
    0x331c35f6825b0c000,
    0x3327ccaaa2e106000,
    0x3333e75228d7a2000,
    0x33438112ea64c6000,
    0x334ea56f0cc982000,
    0x336054d97e2b1c000,
    0x33739c3e1e2a80000,
    0x33877ad79feb4a000,
    0x339ae6cb64d7ae000,
    0x33b20b2b39877e000,
    0x33c9d1ae0172ac000,
    0x33e56ff87a0564000,
    0x3404feb8b4f7c4000,
    0x342325830c10b4000,
    0x3440f004784f2a000,
    0x3462ca02da4518000,
    0x348452728fd788000,
    0x34ac51bf18a9ae000,
    0x34d66354b591fa000,
    0x34fdf310f9295a000,
    0x3529efd87c9b92000,
    0x35594d2ae53586000,
    0x35888dddab0ac4000,
    0x35b8e449d837d0000,
    0x35f1b109377afc000,
    0x36281668633444000,
    0x36610060bb4be4000,
    0x369f0e3109db94000,
    0x36de934407bbee000,
    0x3720e8e2f72bb0000,
    0x3764d7283bbdae000,
    0x37afc3e8514ed4000,
    0x37f87b020a4bb2000,
    0x3849dd8293c14c000,
    0x3897c0a356722e000,
    0x38ed45e122cdbe000,
    0x3947e2f1536548000,
    0x39a715aaa00df6000,
    0x3a0a548ef67f16000,
    0x3a6b122c7eaa88000,
    0x3ad30f7b15c258000,
    0x3b42a33d9ff254000,
    0x3bb63eba287ec0000,
    0x3c2fac35b78b5c000,
    0x3ca8ba039ab854000,
    0x3d2dc0cd7a6eb0000,
    0x3db478ed1d1920000,
    0x3e42f4086c3ce4000,
    0x3ed7030fc40dfa000,
    0x3f7647c83067c0000,
    0x40194618c1f640000,
    0x40c20e23451274000,
    0x4173cb9d9a233c000,
    0x4230f85f3f4cb8000,
    0x42f46dd1f61dd4000,
    0x43c296f794d74c000,
    0x449919b0030680000,
    0x457fdf12a8412c000,
    0x466f7a91328dc8000,
    0x476cf6c2955df4000,
    0x4875fe246443cc000,
    0x498c9d95214630000,
    0x4ab579e42cff88000,
    0x4bf0db99af357c000,
    0x4d3bf2ea124874000,
    0x4e9d4a278e54dc000,
    0x5016e69f130234000,
    0x51a9020267d1c0000,
    0x5351bfc4329790000,
    0x551943e764937c000,
    0x570206fefbfe14000,
    0x590e1777820aa4000,
    0x5b465cc6161418000,
    0x5da35c55c15ea4000,
    0x6038a5867d0d0c000,
    0x6305396bbd8c6c000,
    0x66156f95ce069c000,
    0x696fed287436c0000,
    0x6d1d3d3d0746a4000,
    0x712a028ee27c24000,
    0x75b108d70c7328000,
    0x7abda3e03ae1d8000,
    0x806e32684f4410000,
    0x86e0f8986768f0000,
    0x8e40751c3e9188000,
    0x96ce4b5e089310000,
    0xa0d60280d33f78000,
    0xacc1870bdfb070000,
    0xbb315a0054f090000,
    0xcd19e970f3d7a8000,
    0xe3e9e44a04b8a8000,
    0x10215cc849125b0000,
    0x12c1cd23b815ed0000,
    0x16b09ff48077fe0000,
    0x1d50e50ee8d55c0000,
    0x2b33a7f9a076760000,
];
