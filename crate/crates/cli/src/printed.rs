//! Generators, series and witnesses as printed in the reference text, used
//! as expected values by the verification harness.

/// Three-item models.
pub const INV3: [&str; 2] = ["p132p231 - p123p321", "p213p312 - p123p321"];
pub const ASC3: [&str; 1] = ["p123p231p312 - p132p213p321"];

/// The six 2×2 minors of the four-item Csiszár model.
pub const CSI4: [&str; 6] = [
    "p1243p2134 - p1234p2143",
    "p1342p3124 - p1324p3142",
    "p1432p4123 - p1423p4132",
    "p2341p3214 - p2314p3241",
    "p2431p4213 - p2413p4231",
    "p3421p4312 - p3412p4321",
];
pub const CSI4_DEGREE: u64 = 32;

pub const INV4_NUMERATOR: [i64; 6] = [1, 17, 72, 72, 17, 1];
pub const ASC4_NUMERATOR: [i64; 7] = [1, 12, 72, 228, 291, 168, 36];

/// The cubic Markov element for six items and its fiber, given as a
/// multiset of inverted item pairs.
pub const INV6_CUBIC: [[&str; 3]; 2] = [["123456", "123645", "416253"], ["123465", "162345", "412536"]];
pub const INV6_FIBER_PAIRS: [(usize, usize); 9] =
    [(1, 4), (2, 4), (2, 6), (3, 4), (3, 5), (3, 6), (4, 6), (5, 6), (5, 6)];

/// Chain 1<2<3 plus one free item.
pub const MIXED4_STATES: [&str; 4] = ["1234", "1243", "1423", "4123"];

/// Chain 1<2<3 plus two free items, inversion model.
pub const MIXED5_INV: [&str; 40] = [
    "p41523p51423-p14523p54123",
    "p41253p51423-p14253p54123",
    "p41235p51423-p14235p54123",
    "p41253p51243-p12453p54123",
    "p41235p51243-p12435p54123",
    "p15423p51243-p15243p51423",
    "p14253p51243-p12453p51423",
    "p14235p51243-p12435p51423",
    "p41235p51234-p12345p54123",
    "p15423p51234-p15234p51423",
    "p15243p51234-p15234p51243",
    "p14235p51234-p12345p51423",
    "p12543p51234-p12534p51243",
    "p12435p51234-p12345p51243",
    "p15423p45123-p14523p54123",
    "p15243p45123-p41523p51243",
    "p15234p45123-p41523p51234",
    "p12543p45123-p12453p54123",
    "p12534p45123-p41253p51234",
    "p12354p45123-p12345p54123",
    "p15243p41253-p12543p41523",
    "p15234p41253-p12534p41523",
    "p14523p41253-p14253p41523",
    "p15234p41235-p12354p41523",
    "p14523p41235-p14235p41523",
    "p14253p41235-p14235p41253",
    "p12534p41235-p12354p41253",
    "p12453p41235-p12435p41253",
    "p14253p15243-p12453p15423",
    "p14235p15243-p12435p15423",
    "p14235p15234-p12345p15423",
    "p12543p15234-p12534p15243",
    "p12435p15234-p12345p15243",
    "p12543p14523-p12453p15423",
    "p12534p14523-p14253p15234",
    "p12354p14523-p12345p15423",
    "p12534p14235-p12354p14253",
    "p12453p14235-p12435p14253",
    "p12435p12534-p12345p12543",
    "p12354p12453-p12345p12543",
];
pub const MIXED5_INV_NUMERATOR: [i64; 5] = [1, 12, 38, 28, 3];

/// Same poset, alternative inversion model.
pub const MIXED5_ALT: [&str; 19] = [
    "p15243p51423 - p12543p54123",
    "p15234p51423 - p12534p54123",
    "p15423p51243 - p12543p54123",
    "p15234p51243 - p12354p54123",
    "p12534p51243 - p12354p51423",
    "p15423p51234 - p12534p54123",
    "p15243p51234 - p12354p54123",
    "p15234p51234 - p12345p54123",
    "p12543p51234 - p12354p51423",
    "p12534p51234 - p12345p51423",
    "p12354p51234 - p12345p51243",
    "p12534p15243 - p12354p15423",
    "p12543p15234 - p12354p15423",
    "p12534p15234 - p12345p15423",
    "p12354p15234 - p12345p15243",
    "p12354p12534 - p12345p12543",
    "p12435p12453 - p12345p12543",
    "p14235p14253p14523 - p12345p15243p15423",
    "p41235p41253p41523p45123 - p12345p51243p51423p54123",
];
pub const MIXED5_ALT_NUMERATOR: [i64; 9] = [1, 9, 28, 51, 66, 63, 44, 21, 5];

/// The ascending cubic and inversion quadric separating the models.
pub const ASC4_CUBIC: &str = "p1234p1342p1423 - p1243p1324p1432";
pub const INV4_QUADRIC: &str = "p1243p4321 - p2143p4312";

/// Pairwise marginals of the three-item model: `(i, j, words with i
/// before j, words with j before i)`.
pub const PAIRWISE3: [(usize, usize, [&str; 3], [&str; 3]); 3] = [
    (1, 2, ["123", "132", "312"], ["213", "231", "321"]),
    (1, 3, ["132", "123", "213"], ["312", "321", "231"]),
    (2, 3, ["123", "213", "231"], ["132", "312", "321"]),
];
pub const BT3_CIRCUIT: &str = "q12q23q31 - q21q32q13";

pub const CSI5_NUMERATOR: [i64; 21] = [
    1,
    70,
    2215,
    42020,
    534635,
    4837694,
    32227985,
    161529320,
    617560160,
    1816401720,
    4129171068,
    7265606880,
    9880962560,
    10337876480,
    8250364160,
    4953798656,
    2189864960,
    688455680,
    145162240,
    18350080,
    1048576,
];
pub const CSI5_DEGREE: u64 = 50493797160;
pub const INV5_QUADRICS: usize = 3029;
