use criterion::{black_box, criterion_group, criterion_main, Criterion};

use appell_core::fourier::{bernoulli_fourier, euler_order_r_fourier, SumVariant};
use appell_core::higher::{bernoulli_higher_number, euler_higher_poly_stirling};
use appell_core::oracle::{appell_from_f, bernoulli_f_series, euler_f_series};
use appell_core::symmetry::{decompose, reconstruct_bernoulli_form, vn_membership, Parity};
use appell_core::{Family, Rational};

fn series_kernels(c: &mut Criterion) {
    c.bench_function("bernoulli_kernel_r5_order30", |b| {
        b.iter(|| bernoulli_f_series(black_box(5), false, black_box(30)))
    });
    c.bench_function("euler_kernel_r3_scaled_order30", |b| {
        b.iter(|| euler_f_series(black_box(3), true, black_box(30)))
    });
}

fn expansions(c: &mut Criterion) {
    let f = bernoulli_f_series(2, false, 30);
    c.bench_function("appell_expansion_order30", |b| {
        b.iter(|| appell_from_f(black_box(&f), 30).unwrap())
    });
    c.bench_function("higher_bernoulli_numbers_r4_to_n30", |b| {
        b.iter(|| {
            (0..=30)
                .map(|n| bernoulli_higher_number(n, black_box(4)))
                .collect::<Vec<_>>()
        })
    });
    c.bench_function("euler_stirling_form_n16_r3", |b| {
        b.iter(|| euler_higher_poly_stirling(black_box(16), black_box(3)))
    });
}

fn reconstruction(c: &mut Criterion) {
    let f = bernoulli_f_series(2, false, 24);
    let d = decompose(&f, &Rational::from_int(2), Parity::Even).unwrap();
    c.bench_function("bernoulli_form_reconstruction_n20", |b| {
        b.iter(|| reconstruct_bernoulli_form(black_box(&d), 20).unwrap())
    });
    let p = appell_from_f(&euler_f_series(1, false, 12), 12)
        .unwrap()
        .polynomial(12)
        .clone();
    c.bench_function("vn_membership_n12", |b| {
        b.iter(|| vn_membership(black_box(&p), 12, &Rational::from_int(2), Family::Bernoulli))
    });
}

fn fourier_sums(c: &mut Criterion) {
    let half = Rational::new(1, 2);
    c.bench_function("bernoulli_fourier_n2_m10k", |b| {
        b.iter(|| bernoulli_fourier(2, black_box(&half), 10_000).unwrap())
    });
    let x = Rational::new(3, 2);
    c.bench_function("euler_order2_fourier_m2k", |b| {
        b.iter(|| euler_order_r_fourier(3, 2, black_box(&x), 2_000, SumVariant::Derived).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = series_kernels, expansions, reconstruction, fourier_sums
}

criterion_main!(benches);
