use ptcrystal::classify::{fixed_point_profile, reduce, reduce_star, stars_up_to, Star};

// C4v in the order E, C2, C4, C4^-1, sigma_x, sigma_y, sigma_d, sigma_d'
const OPS: [[[i32; 2]; 2]; 8] = [
    [[1, 0], [0, 1]],
    [[-1, 0], [0, -1]],
    [[0, -1], [1, 0]],
    [[0, 1], [-1, 0]],
    [[-1, 0], [0, 1]],
    [[1, 0], [0, -1]],
    [[0, 1], [1, 0]],
    [[0, -1], [-1, 0]],
];

const CHARACTERS: [[i32; 8]; 5] = [
    [1, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, -1, -1, -1, -1],
    [1, 1, -1, -1, 1, 1, -1, -1],
    [1, 1, -1, -1, -1, -1, 1, 1],
    [2, -2, 0, 0, 0, 0, 0, 0],
];

fn oracle(points: &[[i32; 2]]) -> Vec<usize> {
    let fixed: Vec<i32> = OPS
        .iter()
        .map(|m| {
            points
                .iter()
                .filter(|p| m[0][0] * p[0] + m[0][1] * p[1] == p[0] && m[1][0] * p[0] + m[1][1] * p[1] == p[1])
                .count() as i32
        })
        .collect();
    CHARACTERS
        .iter()
        .map(|chi| {
            let s: i32 = fixed.iter().zip(chi).map(|(p, c)| p * c).sum();
            assert_eq!(s % 8, 0);
            (s / 8) as usize
        })
        .collect()
}

#[test]
fn published_reductions() {
    let m2 = reduce_star(&Star::named("m2").unwrap()).unwrap();
    assert_eq!(m2.profile, [8, 0, 0, 0, 0, 0, 0, 0]);
    assert_eq!(m2.multiplicities, [1, 1, 1, 1, 2]);
    assert_eq!(m2.irreps, ["A1", "A2", "B1", "B2", "E"]);
    let g1 = reduce_star(&Star::named("gamma1").unwrap()).unwrap();
    assert_eq!(g1.multiplicities, [1, 0, 0, 0, 0]);
    let g2 = reduce_star(&Star::named("gamma2").unwrap()).unwrap();
    assert_eq!(g2.profile, [4, 0, 0, 0, 0, 0, 2, 2]);
    assert_eq!(g2.multiplicities, [1, 0, 0, 1, 1]);
}

#[test]
fn named_stars_agree_with_the_counting_oracle() {
    for name in ["gamma1", "gamma2", "x1", "m1", "m2"] {
        let star = Star::named(name).unwrap();
        assert_eq!(reduce_star(&star).unwrap().multiplicities, oracle(&star.points), "{name}");
    }
}

#[test]
fn sum_rule_for_every_small_star() {
    let stars = stars_up_to(10);
    assert_eq!(stars.len(), 8);
    let covered: usize = stars.iter().map(Star::len).sum();
    assert_eq!(covered, 37);
    for star in &stars {
        let r = reduce_star(star).unwrap();
        assert_eq!(r.total_dimension(), star.len(), "{}", star.name);
        assert_eq!(r.multiplicities, oracle(&star.points), "{}", star.name);
    }
}

#[test]
fn inconsistent_profiles_are_rejected() {
    assert!(reduce(&[3, 0, 0, 0, 0, 0, 0, 0]).is_err());
    assert_eq!(fixed_point_profile(&Star::orbit([2, 0])), [4, 0, 0, 0, 2, 2, 0, 0]);
}
