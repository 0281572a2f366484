//! Exchange-operator workflows: equation systems, invertibility, quaternion
//! blocks, and braid representations built from certificates.

mod common;

use common::{hamilton_extension, symbol_extension, trivial_extension};
use galoisazu_core::rmatrix::{
    braid_representation, fs_and_yang_baxter, left_mult_operator, left_operator_invertible,
    quaternion_eta_blocks, RMatrixError,
};

#[test]
fn equation_systems_hold_on_every_fixture() {
    for (name, extension) in [
        ("hamilton", hamilton_extension()),
        ("symbol", symbol_extension()),
        ("trivial", trivial_extension()),
    ] {
        let cert = extension.certify().unwrap();
        let report = fs_and_yang_baxter(&cert).expect("tensor cube fits the cap");
        assert!(report.fs_holds, "{name}");
        assert!(report.yang_baxter_holds, "{name}");
    }
}

#[test]
fn operator_invertibility_tracks_the_azumaya_property() {
    let hamilton = hamilton_extension().certify().unwrap();
    assert!(left_operator_invertible(&hamilton).unwrap());

    let symbol = symbol_extension().certify().unwrap();
    assert!(left_operator_invertible(&symbol).unwrap());

    let trivial = trivial_extension().certify().unwrap();
    assert!(
        !left_operator_invertible(&trivial).unwrap(),
        "the split commutative example has a singular operator"
    );
    let operator = left_mult_operator(&trivial).unwrap();
    assert_eq!(operator.rank(), 6, "rank equals the number of idempotents");
}

#[test]
fn quaternion_blocks_partition_the_tensor_square() {
    let cert = hamilton_extension().certify().unwrap();
    let blocks = quaternion_eta_blocks(&cert).unwrap();

    let mut seen = [[false; 4]; 4];
    for subspace in &blocks.subspaces {
        for &(i, j) in subspace {
            assert!(!seen[i][j], "pair ({i}, {j}) appears twice");
            seen[i][j] = true;
        }
    }
    assert!(
        seen.iter().flatten().all(|&s| s),
        "the four subspaces cover all sixteen basis pairs"
    );
    for matrix in &blocks.matrices {
        assert_eq!(matrix.rows(), 4);
        assert_eq!(matrix.cols(), 4);
    }
}

#[test]
fn blocks_are_refused_outside_quaternion_algebras() {
    let cert = trivial_extension().certify().unwrap();
    assert!(matches!(
        quaternion_eta_blocks(&cert),
        Err(RMatrixError::NotQuaternion(_))
    ));
}

#[test]
fn braid_relations_hold_on_three_and_four_strands() {
    let cert = hamilton_extension().certify().unwrap();

    let three = braid_representation(&cert, 3).unwrap();
    assert_eq!(three.space_dim, 64);
    assert_eq!(three.generators.len(), 2);
    assert!(three.braid_relations_hold);
    assert!(three.distant_generators_commute);

    let four = braid_representation(&cert, 4).unwrap();
    assert_eq!(four.space_dim, 256);
    assert_eq!(four.generators.len(), 3);
    assert!(four.braid_relations_hold);
    assert!(
        four.distant_generators_commute,
        "generators acting on disjoint slots must commute"
    );
}

#[test]
fn braid_spaces_are_capped() {
    let cert = symbol_extension().certify().unwrap();
    assert!(
        matches!(
            braid_representation(&cert, 3),
            Err(RMatrixError::TooLarge { .. })
        ),
        "9^3 = 729 coordinates exceed the braid cap"
    );
}

#[test]
fn too_few_strands_is_an_input_error() {
    let cert = hamilton_extension().certify().unwrap();
    assert!(matches!(
        braid_representation(&cert, 1),
        Err(RMatrixError::TooFewStrands { .. })
    ));
}
