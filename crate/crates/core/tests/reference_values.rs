//! Reference values for the worked examples: orbits, encodings, frequency
//! tables, orbit decompositions, snake compositions and toggle-orbit periods.

use grot_core::encoding::{decompose_space, encode, orbit_size, orbit_size_factors};
use grot_core::orbitstats::{check_theorem1, frequency_table, frequency_table_right};
use grot_core::rotation::orbit;
use grot_core::toggle::{
    column_sums_via_frequency, decompose_x, enumerate_x, find_snakes, first_snake_tilde,
    orbit_board, phi, phi_orbit_size_fast,
};
use grot_core::{BinaryWord, ToggleWord};

fn w(s: &str) -> BinaryWord {
    BinaryWord::parse(s).unwrap()
}

fn tw(s: &str) -> ToggleWord {
    ToggleWord::parse(s, 3).unwrap()
}

const ORBIT_1011110: [&str; 9] = [
    "1011110", "1111001", "1001111", "0111101", "1111010", "1010111", "1011101", "1110101",
    "0101111",
];

#[test]
fn nine_element_orbit() {
    let o = orbit(&w("1011110"), 3).unwrap();
    let got: Vec<String> = o.words().iter().map(|x| x.to_string()).collect();
    assert_eq!(got, ORBIT_1011110);
}

#[test]
fn encodings_along_the_orbit() {
    // (word, one-run encoding, rw, bqw)
    let rows = [
        ("1011110", "140", "110", "010"),
        ("1111001", "401", "101", "100"),
        ("1001111", "104", "101", "001"),
        ("0111101", "041", "011", "010"),
        ("1111010", "410", "110", "100"),
        ("1010111", "113", "110", "001"),
        ("1011101", "131", "101", "010"),
        ("1110101", "311", "011", "100"),
        ("0101111", "014", "011", "001"),
    ];
    for (word, ore, rw, bqw) in rows {
        let x = w(word);
        assert_eq!(x.one_run_encoding().to_string(), ore);
        let p = encode(&x, 3).unwrap();
        assert_eq!(p.rw_string(), rw, "{word}");
        assert_eq!(p.bqw().to_string(), bqw, "{word}");
        assert_eq!(p.qw().to_string(), bqw, "qw of {word} is 0/1 here");
    }
}

#[test]
fn frequency_table_of_1011110() {
    let expected = [
        [9, 2, 0, 0, 0, 0, 0, 0],
        [0, 7, 6, 2, 0, 0, 0, 0],
        [0, 0, 3, 4, 3, 0, 0, 0],
        [0, 0, 0, 3, 4, 3, 0, 0],
        [0, 0, 0, 0, 2, 6, 7, 0],
        [0, 0, 0, 0, 0, 0, 2, 9],
    ];
    let left = frequency_table(&w("1011110"), 3).unwrap();
    let right = frequency_table_right(&w("1011110"), 3).unwrap();
    for (s, row) in expected.iter().enumerate() {
        assert_eq!(left.rows()[s], row.to_vec());
        assert_eq!(right.rows()[s], row.to_vec());
    }
    assert!(check_theorem1(&w("1011110"), 3).unwrap().passed());
}

/// Every listed `(w, bqw, rw, s × t)` row, checked against our canonical
/// decomposition of `{0,1}^7` with `m = 3`.
#[test]
fn decomposition_of_length_seven() {
    let rows = [
        ("1111111", "11", "1", 1, 1),
        ("1111101", "10", "21", 2, 2),
        ("1111110", "110", "00", 3, 1),
        ("1101101", "00", "221", 1, 3),
        ("1111010", "100", "110", 3, 3),
        ("1111100", "100", "200", 3, 3),
        ("1100110", "000", "2020", 1, 2),
        ("1101010", "000", "2110", 1, 4),
        ("1100101", "000", "2011", 1, 4),
        ("1101100", "000", "2200", 1, 4),
        ("1101001", "000", "2101", 1, 4),
        ("1010101", "000", "1111", 1, 1),
        ("1111000", "1000", "1000", 4, 4),
        ("1010010", "0000", "11010", 1, 5),
        ("1101000", "0000", "21000", 1, 5),
        ("1100100", "0000", "20100", 1, 5),
        ("1100010", "0000", "20010", 1, 5),
        ("1100001", "0000", "20001", 1, 5),
        ("1010100", "0000", "11100", 1, 5),
        ("1110000", "10000", "00000", 5, 1),
        ("1100000", "00000", "200000", 1, 6),
        ("1001000", "00000", "101000", 1, 6),
        ("1010000", "00000", "110000", 1, 6),
        ("1000100", "00000", "100100", 1, 3),
        ("1000000", "000000", "1000000", 1, 7),
        ("0000000", "0000000", "00000000", 1, 1),
    ];
    let census = decompose_space(7, 3).unwrap();
    assert_eq!(census.len(), rows.len());
    assert_eq!(census.iter().map(|o| o.size).sum::<usize>(), 128);
    let mut hit = vec![false; census.len()];
    for (word, bqw, rw, bqw_period, rw_period) in rows {
        let x = w(word);
        let p = encode(&x, 3).unwrap();
        assert_eq!(p.bqw().to_string(), bqw, "{word}");
        assert_eq!(p.rw_string(), rw, "{word}");
        assert_eq!(
            orbit_size_factors(&x, 3).unwrap(),
            (rw_period, bqw_period),
            "{word}"
        );
        let o = orbit(&x, 3).unwrap();
        assert_eq!(o.size(), bqw_period * rw_period);
        let idx = census
            .iter()
            .position(|c| o.contains(&c.representative))
            .expect("listed word lies in some census orbit");
        assert_eq!(census[idx].size, o.size());
        assert!(!hit[idx], "two listed words share an orbit");
        hit[idx] = true;
    }
    assert!(hit.iter().all(|&h| h));
}

#[test]
fn largest_orbit() {
    assert_eq!(orbit_size(&w("1111000"), 3).unwrap(), 16);
    let census = decompose_space(7, 3).unwrap();
    assert_eq!(census.iter().map(|o| o.size).max(), Some(16));
}

#[test]
fn x7_orbits() {
    let listed: [&[&str]; 3] = [
        &["1000010", "0100001", "0010000", "0001000", "0000100"],
        &[
            "1000100", "0000010", "1000001", "0100000", "0010001", "0000000",
        ],
        &["1000000", "0100010", "0000001"],
    ];
    assert_eq!(enumerate_x(7, 3).unwrap().len(), 14);
    for orbit_words in listed {
        let board = orbit_board(&tw(orbit_words[0])).unwrap();
        let mut got: Vec<String> = board.rows().iter().map(|r| r.to_string()).collect();
        let mut want: Vec<String> = orbit_words.iter().map(|s| s.to_string()).collect();
        got.sort();
        want.sort();
        assert_eq!(got, want);
    }
    assert_eq!(phi(&tw("0000000")), tw("1000100"));
}

#[test]
fn nine_snakes() {
    let expected = [
        "1411114", "1111441", "1441111", "4111141", "1111414", "1414111", "1411141", "1114141",
        "4141111",
    ];
    let board = orbit_board(&tw("10000000001000")).unwrap();
    let snakes = find_snakes(&board).unwrap();
    let got: Vec<String> = snakes.iter().map(|s| s.composition.to_string()).collect();
    let start = got.iter().position(|c| c == expected[0]).unwrap();
    let rotated: Vec<String> = (0..got.len())
        .map(|t| got[(start + t) % got.len()].clone())
        .collect();
    assert_eq!(rotated, expected);
    let tildes: Vec<String> = snakes
        .iter()
        .map(|s| s.tilde(3).unwrap().to_string())
        .collect();
    let mut sorted_tildes = tildes.clone();
    sorted_tildes.sort();
    let mut orbit_sorted = ORBIT_1011110.map(String::from).to_vec();
    orbit_sorted.sort();
    assert_eq!(sorted_tildes, orbit_sorted);
}

#[test]
fn board_column_sums_from_frequencies() {
    let s = tw("10000000001000");
    let sums = column_sums_via_frequency(&s).unwrap();
    assert_eq!(sums, orbit_board(&s).unwrap().column_sums());
    assert_eq!(&sums[..7], &[9, 7, 3, 3, 4, 6, 4]);
    assert_eq!(sums[13], 9);
    let t = frequency_table(&w("1011110"), 3).unwrap();
    assert_eq!(t.get(0, 0) + t.get(4, 3), 9);
    assert_eq!(t.get(1, 1) + t.get(5, 4), 7);
    assert_eq!(t.get(0, 1) + t.get(4, 4), 4);
    assert_eq!(t.get(1, 2) + t.get(5, 5), 6);
}

#[test]
fn toggle_orbits_of_x14() {
    // (S, first snake tilde, bqw, rw, period)
    let rows = [
        ("10000100001000", "1111111111111", "1111", "1", 5),
        ("10000001000010", "1111111101", "110", "21", 27),
        ("10000010000100", "1111111110", "1110", "00", 17),
        ("10000001000100", "1101101", "00", "221", 11),
        ("10000010000001", "1111010", "100", "110", 31),
        ("10000010000010", "1111100", "100", "200", 31),
        ("10000000000000", "1000", "000", "1000", 9),
    ];
    assert_eq!(enumerate_x(14, 3).unwrap().len(), 131);
    let census = decompose_x(14, 3).unwrap();
    assert_eq!(census.len(), rows.len());
    let mut hit = vec![false; census.len()];
    for (s, tilde, bqw, rw, period) in rows {
        let s = tw(s);
        let c = first_snake_tilde(&s).unwrap().unwrap();
        assert_eq!(c.to_string(), tilde);
        let p = encode(&c, 3).unwrap();
        assert_eq!(p.bqw().to_string(), bqw);
        assert_eq!(p.rw_string(), rw);
        let board = orbit_board(&s).unwrap();
        assert_eq!(board.q(), period);
        assert_eq!(phi_orbit_size_fast(&s).unwrap(), period);
        let idx = census
            .iter()
            .position(|o| board.rows().contains(o.representative.word()))
            .unwrap();
        assert_eq!(census[idx].period, period);
        assert!(!hit[idx]);
        hit[idx] = true;
    }
}
