//! The fixed configuration catalogs. Each pattern is the violation form of a
//! structural property of a minimal counterexample: its absence is the property.

use std::sync::OnceLock;

use super::{Bound, Case, Constraint, EdgeRole, NodeSpec, Pattern, Recipe};
use crate::metrics::{Class, Scheme};

use Class::*;
use EdgeRole::{OtherAt, Pattern as E};

fn any(name: &'static str) -> NodeSpec {
    NodeSpec { name, degree: Constraint::Any, class: Constraint::Any }
}

fn deg(name: &'static str, d: usize) -> NodeSpec {
    NodeSpec { name, degree: Constraint::OneOf(vec![d]), class: Constraint::Any }
}

fn deg_not(name: &'static str, ds: &[usize]) -> NodeSpec {
    NodeSpec { name, degree: Constraint::NoneOf(ds.to_vec()), class: Constraint::Any }
}

fn cls(name: &'static str, cs: &[Class]) -> NodeSpec {
    NodeSpec { name, degree: Constraint::Any, class: Constraint::OneOf(cs.to_vec()) }
}

fn cls_not(name: &'static str, cs: &[Class]) -> NodeSpec {
    NodeSpec { name, degree: Constraint::Any, class: Constraint::NoneOf(cs.to_vec()) }
}

fn b(role: EdgeRole, before: usize) -> Bound {
    Bound { role, before, after: None }
}

fn ba(role: EdgeRole, before: usize, after: usize) -> Bound {
    Bound { role, before, after: Some(after) }
}

fn case(name: &'static str, refine: Vec<(usize, NodeSpec)>, recipe: Recipe) -> Case {
    Case { name, refine, recipe }
}

fn only(recipe: Recipe) -> Vec<Case> {
    vec![case("main", vec![], recipe)]
}

fn generic(node: usize) -> Vec<Case> {
    vec![case("generic", vec![], Recipe::generic(node))]
}

const C3: &[Class] = &[Deg3CWeak, Deg3CModerate, Deg3CStrong];
const C4: &[Class] = &[Deg4CStrong, Deg4CWeak];

fn theta7() -> Vec<Pattern> {
    let s = Scheme::Theta7;
    vec![
        Pattern::new("T7.deg", s, "vertex of degree other than 2, 3 or 4", vec![deg_not("x", &[2, 3, 4])], vec![], vec![], generic(0)),
        Pattern::new(
            "T7.2v",
            s,
            "2-vertex with a neighbor that is not a 4-vertex",
            vec![deg("x", 2), deg_not("y", &[4])],
            vec![(0, 1)],
            vec![],
            generic(0),
        ),
        Pattern::new(
            "T7.3dv",
            s,
            "3(D)-vertex adjacent to a 3(D)-vertex and to a 3-vertex that is not 3(B)",
            vec![cls("x", &[Deg3D]), cls("y", &[Deg3D]), cls_not("z", &[Deg3B])],
            vec![(0, 1), (0, 2)],
            vec![],
            generic(0),
        ),
        Pattern::new(
            "T7.4v",
            s,
            "4-vertex adjacent to two 2-vertices",
            vec![deg("x", 4), deg("y1", 2), deg("y2", 2)],
            vec![(0, 1), (0, 2)],
            vec![],
            generic(0),
        ),
        Pattern::new(
            "T7.triangle",
            s,
            "triangle",
            vec![any("x1"), any("x2"), any("x3")],
            vec![(0, 1), (0, 2), (1, 2)],
            vec![],
            vec![
                case(
                    "three 3-vertices",
                    vec![(0, deg("x1", 3)), (1, deg("x2", 3)), (2, deg("x3", 3))],
                    Recipe { delete: 0, erase: vec![], bounds: vec![b(OtherAt(0), 12), b(E(0, 1), 9), b(E(0, 2), 9)] },
                ),
                case(
                    "one 4-vertex and two 3-vertices",
                    vec![(0, deg("x1", 4)), (1, deg("x2", 3)), (2, deg("x3", 3))],
                    Recipe {
                        delete: 1,
                        erase: vec![(0, 2)],
                        bounds: vec![ba(OtherAt(1), 13, 12), ba(E(1, 0), 11, 10), ba(E(1, 2), 10, 9), ba(E(0, 2), 10, 10)],
                    },
                ),
                case("generic", vec![], Recipe::generic(0)),
            ],
        ),
        Pattern::new(
            "T7.4cycle",
            s,
            "4-cycle x1x2x3x4 with x1 a 3(D)-vertex and x2, x3, x4 3-vertices",
            vec![cls("x1", &[Deg3D]), deg("x2", 3), deg("x3", 3), deg("x4", 3), any("y")],
            vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)],
            vec![],
            only(Recipe { delete: 0, erase: vec![], bounds: vec![b(E(0, 4), 12), b(E(0, 1), 10), b(E(0, 3), 10)] }),
        ),
        Pattern::new(
            "T7.5cycle",
            s,
            "5-cycle x1..x5 with x1, x3, x4 3(D)-vertices and x2, x5 3-vertices",
            vec![cls("x1", &[Deg3D]), deg("x2", 3), cls("x3", &[Deg3D]), cls("x4", &[Deg3D]), deg("x5", 3), any("y")],
            vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)],
            vec![(5, 2), (5, 3)],
            only(Recipe {
                delete: 0,
                erase: vec![(2, 3)],
                bounds: vec![ba(E(0, 5), 12, 12), ba(E(0, 1), 11, 10), ba(E(0, 4), 11, 10), ba(E(2, 3), 10, 10)],
            }),
        ),
        Pattern::new(
            "T7.pan",
            s,
            "5-cycle x1..x5 with pendant x1y, y a 3(C)- or 3(D)-vertex, x1 and x4 3(D)-vertices",
            vec![
                cls("x1", &[Deg3D]),
                deg("x2", 3),
                deg("x3", 3),
                cls("x4", &[Deg3D]),
                deg("x5", 3),
                cls("y", &[Deg3CWeak, Deg3CModerate, Deg3CStrong, Deg3D]),
            ],
            vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)],
            vec![(5, 2), (5, 3)],
            only(Recipe {
                delete: 0,
                erase: vec![(2, 3)],
                bounds: vec![ba(E(0, 5), 11, 11), ba(E(0, 1), 11, 10), ba(E(0, 4), 11, 10), ba(E(2, 3), 11, 11)],
            }),
        ),
        Pattern::new(
            "T7.3d1",
            s,
            "3(D)-vertex adjacent to two 3(C_weak)-vertices",
            vec![
                cls("x", &[Deg3D]),
                cls("y1", &[Deg3CWeak]),
                cls("y2", &[Deg3CWeak]),
                cls("z1", &[Deg3D]),
                cls("z2", &[Deg3D]),
                any("w"),
            ],
            vec![(0, 1), (0, 2), (0, 5), (1, 3), (2, 4)],
            vec![(1, 2), (1, 4), (3, 2), (3, 4)],
            only(Recipe {
                delete: 0,
                erase: vec![(1, 3), (2, 4)],
                bounds: vec![
                    ba(E(0, 1), 11, 9),
                    ba(E(0, 2), 11, 9),
                    ba(E(0, 5), 12, 10),
                    ba(E(1, 3), 10, 10),
                    ba(E(2, 4), 10, 10),
                ],
            }),
        ),
        Pattern::new(
            "T7.3d2",
            s,
            "3(D)-vertex with 3(C) neighbors: one 3(C_weak), one 3(C_moderate)",
            vec![
                cls("x", &[Deg3D]),
                cls("y1", &[Deg3CWeak]),
                cls("y2", &[Deg3CModerate]),
                cls("y3", C3),
                cls("z1", &[Deg3D]),
                cls("z2", C3),
            ],
            vec![(0, 1), (0, 2), (0, 3), (1, 4), (2, 5)],
            vec![(1, 2), (1, 5), (4, 2), (4, 5)],
            only(Recipe {
                delete: 0,
                erase: vec![(1, 4), (2, 5)],
                bounds: vec![
                    ba(E(0, 1), 11, 9),
                    ba(E(0, 2), 11, 9),
                    ba(E(0, 3), 11, 9),
                    ba(E(1, 4), 10, 10),
                    ba(E(2, 5), 11, 11),
                ],
            }),
        ),
    ]
}

fn theta8() -> Vec<Pattern> {
    let s = Scheme::Theta8;
    vec![
        Pattern::new(
            "T8.deg",
            s,
            "vertex of degree other than 3, 4 or 5",
            vec![deg_not("x", &[3, 4, 5])],
            vec![],
            vec![],
            vec![
                case("1-vertex", vec![(0, deg("x", 1))], Recipe { delete: 0, erase: vec![], bounds: vec![b(OtherAt(0), 12)] }),
                case("2-vertex", vec![(0, deg("x", 2))], Recipe { delete: 0, erase: vec![], bounds: vec![b(OtherAt(0), 17)] }),
                case("generic", vec![], Recipe::generic(0)),
            ],
        ),
        Pattern::new(
            "T8.83v",
            s,
            "3-vertex adjacent to a 3-vertex and to a vertex that is not a 5-vertex",
            vec![deg("x", 3), deg("y", 3), deg_not("z", &[5]), any("w")],
            vec![(0, 1), (0, 2), (0, 3)],
            vec![],
            only(Recipe { delete: 0, erase: vec![], bounds: vec![b(E(0, 1), 17), b(E(0, 2), 18), b(E(0, 3), 17)] }),
        ),
        Pattern::new(
            "T8.84v",
            s,
            "4-vertex adjacent to four 3-vertices",
            vec![deg("x", 4), deg("y1", 3), deg("y2", 3), deg("y3", 3), deg("y4", 3)],
            vec![(0, 1), (0, 2), (0, 3), (0, 4)],
            vec![],
            only(Recipe {
                delete: 0,
                erase: vec![],
                bounds: vec![b(E(0, 1), 16), b(E(0, 2), 16), b(E(0, 3), 16), b(E(0, 4), 16)],
            }),
        ),
        Pattern::new(
            "T8.83dv",
            s,
            "3(D)-vertex adjacent to a vertex that is not a 4(B)-vertex",
            vec![cls("x", &[Deg3D]), cls_not("y1", &[Deg4B]), any("y2"), any("y3")],
            vec![(0, 1), (0, 2), (0, 3)],
            vec![],
            vec![
                case(
                    "4-neighbor with two 3-neighbors",
                    vec![(1, cls("y1", &[Deg4CStrong, Deg4CWeak, Deg4D])), (2, deg("y2", 4)), (3, deg("y3", 4))],
                    Recipe { delete: 0, erase: vec![], bounds: vec![b(E(0, 1), 17), b(E(0, 2), 18), b(E(0, 3), 18)] },
                ),
                case("generic", vec![], Recipe::generic(0)),
            ],
        ),
        Pattern::new(
            "T8.84dv",
            s,
            "4(D)-vertex not adjacent to three 3(B_strong)-vertices and one 4(A)- or 4(B)-vertex",
            vec![cls("x", &[Deg4D]), deg("y1", 3), deg("y2", 3), deg("y3", 3), deg("z", 4)],
            vec![(0, 1), (0, 2), (0, 3), (0, 4)],
            vec![],
            vec![
                case(
                    "3(C) neighbor",
                    vec![(1, cls("y1", &[Deg3C]))],
                    Recipe {
                        delete: 0,
                        erase: vec![],
                        bounds: vec![b(E(0, 1), 16), b(E(0, 2), 17), b(E(0, 3), 17), b(E(0, 4), 18)],
                    },
                ),
                case(
                    "4-neighbor is 4(C) or 4(D)",
                    vec![(4, cls("z", &[Deg4CStrong, Deg4CWeak, Deg4D]))],
                    Recipe {
                        delete: 0,
                        erase: vec![],
                        bounds: vec![b(E(0, 1), 17), b(E(0, 2), 17), b(E(0, 3), 17), b(E(0, 4), 16)],
                    },
                ),
                case("3-neighbor not 3(B_strong)", vec![(1, cls_not("y1", &[Deg3BStrong]))], Recipe::generic(0)),
                case("4-neighbor not 4(A)/4(B)", vec![(4, cls_not("z", &[Deg4A, Deg4B]))], Recipe::generic(0)),
            ],
        ),
        Pattern::new(
            "T8.4ctriangle",
            s,
            "triangle of 4(C)-vertices",
            vec![cls("x1", C4), cls("x2", C4), cls("x3", C4)],
            vec![(0, 1), (0, 2), (1, 2)],
            vec![],
            only(Recipe { delete: 0, erase: vec![], bounds: vec![b(E(0, 1), 13), b(E(0, 2), 13), b(OtherAt(0), 17)] }),
        ),
        Pattern::new(
            "T8.3triangle",
            s,
            "triangle with a 3-vertex",
            vec![deg("x1", 3), any("x2"), any("x3")],
            vec![(0, 1), (0, 2), (1, 2)],
            vec![],
            generic(0),
        ),
        Pattern::new(
            "T8.34c4c4c",
            s,
            "4-cycle x1x2x3x4 with x1 a 3-vertex and x2, x3, x4 4(C)-vertices",
            vec![deg("x1", 3), cls("x2", C4), cls("x3", C4), cls("x4", C4), any("y")],
            vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)],
            vec![],
            only(Recipe { delete: 0, erase: vec![], bounds: vec![b(E(0, 4), 18), b(E(0, 1), 17), b(E(0, 3), 17)] }),
        ),
        Pattern::new(
            "T8.84cv",
            s,
            "4(C_weak)-vertex adjacent to two 4(C)-vertices",
            vec![
                cls("x", &[Deg4CWeak]),
                cls("y1", &[Deg3C]),
                cls("y2", &[Deg3C]),
                cls("z1", C4),
                cls("z2", C4),
                deg("w1", 3),
                deg("w2", 3),
            ],
            vec![(0, 1), (0, 2), (0, 3), (0, 4), (3, 5), (4, 6)],
            vec![(3, 4), (3, 6), (4, 5), (5, 6)],
            only(Recipe {
                delete: 0,
                erase: vec![(3, 5), (4, 6)],
                bounds: vec![
                    ba(E(0, 1), 17, 15),
                    ba(E(0, 2), 17, 15),
                    ba(E(0, 3), 17, 15),
                    ba(E(0, 4), 17, 15),
                    ba(E(3, 5), 17, 17),
                    ba(E(4, 6), 17, 17),
                ],
            }),
        ),
        Pattern::new(
            "T8.85v",
            s,
            "5-vertex adjacent to two 3(B_weak)-vertices",
            vec![
                deg("x", 5),
                cls("y1", &[Deg3BWeak]),
                cls("y2", &[Deg3BWeak]),
                any("y3"),
                any("y4"),
                any("y5"),
                deg("z1", 3),
                deg("z2", 3),
            ],
            vec![(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 6), (2, 7)],
            vec![(1, 2), (1, 7), (2, 6), (6, 7)],
            only(Recipe {
                delete: 0,
                erase: vec![(1, 6), (2, 7)],
                bounds: vec![
                    ba(E(0, 1), 16, 14),
                    ba(E(0, 2), 16, 14),
                    ba(E(0, 3), 18, 16),
                    ba(E(0, 4), 18, 16),
                    ba(E(0, 5), 18, 16),
                    ba(E(1, 6), 15, 15),
                    ba(E(2, 7), 15, 15),
                ],
            }),
        ),
    ]
}

/// The fixed catalog of a scheme, built once.
pub fn catalog(scheme: Scheme) -> &'static [Pattern] {
    static T7: OnceLock<Vec<Pattern>> = OnceLock::new();
    static T8: OnceLock<Vec<Pattern>> = OnceLock::new();
    match scheme {
        Scheme::Theta7 => T7.get_or_init(theta7),
        Scheme::Theta8 => T8.get_or_init(theta8),
    }
}
