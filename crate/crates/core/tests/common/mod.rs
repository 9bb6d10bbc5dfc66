#![allow(dead_code)]

//! Shared test data: three published survey respondents with their
//! comparison matrices and the expected outputs of every rating method.

use paircomp::ComparisonMatrix;

pub struct Respondent {
    pub matrix: ComparisonMatrix,
    pub direct_scores: [f64; 6],
    pub direct_ranks: [u32; 6],
    pub spe: [f64; 6],
    pub sgm: [f64; 6],
    pub scb: [f64; 6],
    pub scw: [f64; 6],
    pub rsr: [u32; 6],
    pub rspe: [u32; 6],
    pub rsgm: [u32; 6],
    pub rscb: [u32; 6],
    pub rscw: [u32; 6],
    pub unique: bool,
}

pub fn respondent_1() -> Respondent {
    Respondent {
        matrix: ComparisonMatrix::from_upper(
            6,
            vec![
                1.0 / 4.0, 5.0, 4.0, 1.0 / 5.0, 4.0,
                5.0, 5.0, 1.0 / 3.0, 5.0,
                1.0 / 3.0, 1.0 / 5.0, 2.0,
                1.0 / 5.0, 3.0,
                5.0,
            ],
        )
        .unwrap(),
        direct_scores: [0.6, 1.0, 0.2, 0.4, 1.0, 0.2],
        direct_ranks: [3, 2, 5, 4, 1, 6],
        spe: [0.3581, 0.6526, 0.1142, 0.1832, 1.0000, 0.0943],
        sgm: [0.3588, 0.6680, 0.1190, 0.1906, 1.0000, 0.0981],
        scb: [0.3218, 0.6551, 0.1036, 0.1581, 1.0000, 0.1018],
        scw: [0.3218, 0.6551, 0.1036, 0.1581, 1.0000, 0.1018],
        rsr: [3, 1, 5, 4, 2, 6],
        rspe: [3, 2, 5, 4, 1, 6],
        rsgm: [3, 2, 5, 4, 1, 6],
        rscb: [3, 2, 5, 4, 1, 6],
        rscw: [3, 2, 5, 4, 1, 6],
        unique: true,
    }
}

pub fn respondent_2() -> Respondent {
    Respondent {
        matrix: ComparisonMatrix::from_upper(
            6,
            vec![
                1.0, 3.0, 3.0, 2.0, 4.0,
                4.0, 2.0, 4.0, 5.0,
                3.0, 1.0, 4.0,
                1.0, 3.0,
                3.0,
            ],
        )
        .unwrap(),
        direct_scores: [1.0, 1.0, 0.75, 0.5, 0.75, 0.5],
        direct_ranks: [2, 1, 3, 4, 5, 6],
        spe: [0.8485, 1.0000, 0.4462, 0.3170, 0.3467, 0.1392],
        sgm: [0.8754, 1.0000, 0.4292, 0.3184, 0.3645, 0.1434],
        scb: [0.7500, 1.0000, 0.4543, 0.2752, 0.2500, 0.1101],
        scw: [1.0000, 1.0000, 0.4543, 0.2752, 0.4543, 0.1667],
        rsr: [1, 2, 3, 5, 4, 6],
        rspe: [2, 1, 3, 5, 4, 6],
        rsgm: [2, 1, 3, 5, 4, 6],
        rscb: [2, 1, 3, 4, 5, 6],
        rscw: [1, 2, 3, 5, 4, 6],
        unique: false,
    }
}

pub fn respondent_3() -> Respondent {
    Respondent {
        matrix: ComparisonMatrix::from_upper(
            6,
            vec![
                1.0 / 4.0, 5.0, 4.0, 1.0 / 3.0, 3.0,
                5.0, 5.0, 3.0, 5.0,
                1.0 / 3.0, 1.0 / 5.0, 1.0 / 3.0,
                1.0 / 4.0, 1.0,
                5.0,
            ],
        )
        .unwrap(),
        direct_scores: [0.8, 1.0, 0.2, 0.6, 0.8, 0.6],
        direct_ranks: [2, 1, 6, 4, 3, 5],
        spe: [0.3773, 1.0000, 0.0930, 0.1630, 0.6213, 0.1631],
        sgm: [0.3865, 1.0000, 0.0916, 0.1710, 0.6368, 0.1728],
        scb: [0.3798, 1.0000, 0.1082, 0.1755, 0.6163, 0.1755],
        scw: [0.3798, 1.0000, 0.1082, 0.1755, 0.6163, 0.2279],
        rsr: [2, 1, 6, 4, 3, 5],
        rspe: [3, 1, 6, 5, 2, 4],
        rsgm: [3, 1, 6, 5, 2, 4],
        rscb: [3, 1, 6, 4, 2, 5],
        rscw: [3, 1, 6, 5, 2, 4],
        unique: false,
    }
}

pub fn all_respondents() -> Vec<Respondent> {
    vec![respondent_1(), respondent_2(), respondent_3()]
}

pub fn assert_close(actual: &[f64], expected: &[f64], tol: f64, context: &str) {
    assert_eq!(actual.len(), expected.len(), "{}: length", context);
    for (i, (&a, &e)) in actual.iter().zip(expected).enumerate() {
        assert!(
            (a - e).abs() <= tol,
            "{}: component {} is {} but {} was expected (tol {})",
            context,
            i,
            a,
            e,
            tol
        );
    }
}
