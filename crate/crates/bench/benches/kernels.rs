use criterion::{criterion_group, criterion_main, Criterion};
use qgroup_core::affine::{self, StringMultiset};
use qgroup_core::hopf::{self, GroupTable};
use qgroup_core::uqsl2;
use qgroup_core::yangian::{self, ShiftParam};
use qgroup_core::{Matrix, Scalar};
use std::hint::black_box;

fn scalars(c: &mut Criterion) {
    let a = Scalar::parse("(q^2-1)/(q*z-1)").unwrap();
    let b = Scalar::parse("(z+q)/(q^3-z)").unwrap();
    c.bench_function("ratfunc mul+add", |bch| bch.iter(|| black_box(&(&a * &b) + &a)));
    let m = Matrix::from_rows((0..4).map(|i| (0..4).map(|j| Scalar::parse(&format!("q^{}+z^{}", i, j)).unwrap()).collect()).collect());
    c.bench_function("4x4 det over Q(q,z)", |bch| bch.iter(|| black_box(m.det())));
}

fn hopf_kernels(c: &mut Criterion) {
    let s3 = hopf::build_group_algebra(&GroupTable::symmetric3());
    c.bench_function("axioms C[S3]", |b| b.iter(|| black_box(hopf::verify_hopf_axioms(&s3))));
    let h = hopf::build_uq_borel_plus(3).unwrap();
    c.bench_function("double u_q(b+) ell=3", |b| b.iter(|| black_box(hopf::drinfeld_double(&h).unwrap().hopf.dim())));
}

fn quantum_kernels(c: &mut Criterion) {
    let x = uqsl2::irrep(2).tensor(&uqsl2::irrep(2)).unwrap();
    c.bench_function("decompose L2⊗L2", |b| b.iter(|| black_box(uqsl2::decompose_type_I(&x).unwrap())));
    c.bench_function("spectral checks", |b| b.iter(|| black_box(affine::spectral_checks().unwrap())));
    let m = StringMultiset::parse("z:0,1,2,2,3,3,3,4").unwrap();
    c.bench_function("string decomposition", |b| b.iter(|| black_box(affine::decompose_into_strings(&m))));
    let a = ShiftParam::symbol("a");
    c.bench_function("qchar V2(a)", |b| b.iter(|| black_box(yangian::qchar_from_module(2, &a).unwrap())));
}

criterion_group!(benches, scalars, hopf_kernels, quantum_kernels);
criterion_main!(benches);
