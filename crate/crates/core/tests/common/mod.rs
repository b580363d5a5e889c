#![allow(dead_code)]

use qzn_core::ZMatrix;

pub const PATIENTS: [&str; 3] = ["Alice", "Bob", "Charlie"];
pub const DIAGNOSES: [&str; 4] = ["Stomach problem", "Viral fever", "Malaria", "Typhoid"];
pub const SYMPTOMS: [&str; 4] = ["cough", "temperature", "headache", "chest pain"];

pub const SZM_A: [[f64; 4]; 3] = [
    [0.35, 0.43, 0.12, 0.61],
    [0.26, 0.49, 0.43, 0.36],
    [0.68, 0.73, 0.12, 0.08],
];
pub const SZM_B: [[f64; 4]; 3] = [
    [0.77, 0.38, 0.84, 0.83],
    [0.33, 0.81, 0.72, 0.28],
    [0.82, 0.89, 0.86, 0.61],
];
pub const RZM_A: [[f64; 4]; 4] = [
    [0.41, 0.43, 0.37, 0.12],
    [0.84, 0.86, 0.21, 0.15],
    [0.25, 0.32, 0.69, 0.38],
    [0.18, 0.24, 0.14, 0.79],
];
pub const RZM_B: [[f64; 4]; 4] = [
    [0.83, 0.87, 0.81, 0.82],
    [0.95, 0.92, 0.87, 0.85],
    [0.91, 0.96, 0.89, 0.92],
    [0.81, 0.87, 0.84, 0.85],
];

fn zip<const R: usize>(a: &[[f64; 4]; R], b: &[[f64; 4]; R]) -> Vec<Vec<(f64, f64)>> {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().copied().zip(rb.iter().copied()).collect())
        .collect()
}

fn strings(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

pub fn szm() -> ZMatrix {
    ZMatrix::build(&zip(&SZM_A, &SZM_B))
        .unwrap()
        .with_labels(strings(&PATIENTS), strings(&SYMPTOMS))
        .unwrap()
}

pub fn rzm() -> ZMatrix {
    ZMatrix::build(&zip(&RZM_A, &RZM_B))
        .unwrap()
        .with_labels(strings(&DIAGNOSES), strings(&SYMPTOMS))
        .unwrap()
}

/// Combined three-qubit amplitudes written out by hand, indexed by basis state.
pub fn combined_amps(x: f64, y: f64) -> [f64; 8] {
    let mut v = [0.0; 8];
    v[0b110] = (x * y).sqrt();
    v[0b101] = (x * (1.0 - y)).sqrt();
    v[0b011] = ((1.0 - x) * y).sqrt();
    v[0b001] = ((1.0 - x) * (1.0 - y)).sqrt();
    v
}

pub fn kron(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x * y);
        }
    }
    out
}

/// Full-register fidelity of two rows of Z-numbers, by explicit Kronecker products.
pub fn brute_fidelity(sample: &[(f64, f64)], reference: &[(f64, f64)]) -> f64 {
    let full = |row: &[(f64, f64)]| {
        row.iter()
            .fold(vec![1.0], |acc, &(a, b)| kron(&acc, &combined_amps(a, b)))
    };
    let (u, v) = (full(sample), full(reference));
    let dot: f64 = u.iter().zip(&v).map(|(x, y)| x * y).sum();
    dot * dot
}
