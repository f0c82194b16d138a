//! Mixing indices worked out by hand.

/// counts (LU, DE, FR, EN), CMI, entropy in bits, M-index with k = 4
pub const CASES: [([u64; 4], f64, f64, f64); 24] = [
    ([10, 0, 0, 0], 0.0, 0.0, 0.0),
    ([0, 7, 0, 0], 0.0, 0.0, 0.0),
    ([1, 1, 1, 1], 75.0, 2.0, 1.0),
    ([9, 1, 0, 0], 10.0, 0.4689955935892812, 0.07317073170731705),
    ([1, 1, 0, 0], 50.0, 1.0, 0.3333333333333333),
    ([3, 1, 0, 0], 25.0, 0.8112781244591328, 0.2),
    ([2, 1, 1, 0], 50.0, 1.5, 0.5555555555555556),
    ([5, 3, 2, 0], 50.0, 1.4854752972273344, 0.5438596491228069),
    ([6, 2, 1, 1], 40.0, 1.5709505944546687, 0.4603174603174602),
    ([50, 25, 15, 10], 50.0, 1.7427376486136672, 0.6328502415458936),
    ([1, 2, 3, 4], 60.0, 1.8464393446710154, 0.7777777777777776),
    ([100, 1, 0, 0], 0.9900990099009901, 0.08013604733127525, 0.006666000066660034),
    ([7, 0, 0, 3], 30.0, 0.8812908992306927, 0.24137931034482765),
    ([0, 0, 5, 5], 50.0, 1.0, 0.3333333333333333),
    ([4, 4, 4, 0], 66.66666666666667, 1.584962500721156, 0.6666666666666667),
    ([8, 1, 1, 0], 20.0, 0.9219280948873623, 0.1717171717171716),
    ([1, 0, 0, 0], 0.0, 0.0, 0.0),
    ([13, 5, 0, 2], 35.0, 1.236160254373812, 0.34006734006733996),
    ([97, 1, 1, 1], 3.0, 0.24194073285321088, 0.020824479388015328),
    ([20, 10, 5, 5], 50.0, 1.75, 0.6363636363636364),
    ([3, 3, 2, 2], 70.0, 1.9709505944546686, 0.9487179487179487),
    ([0, 1, 0, 9], 10.0, 0.4689955935892812, 0.07317073170731705),
    ([11, 7, 3, 0], 47.61904761904762, 1.4180260055608094, 0.4878957169459962),
    ([60, 30, 10, 0], 40.0, 1.295461844238322, 0.39130434782608703),
];
