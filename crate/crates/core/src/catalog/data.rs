use super::ReferenceData;

// Reference graphs with their orientations, trees, cycle matrices and Gram
// matrices. Edge i carries label i+1; vertices are numbered in ascending
// order of their original node number.
pub(super) static REFERENCE_GRAPHS: &[ReferenceData] = &[
    ReferenceData {
        name: "G",
        vertices: 10,
        edges: &[
            (0, 1),
            (3, 0),
            (1, 6),
            (3, 8),
            (6, 7),
            (7, 8),
            (8, 5),
            (5, 9),
            (9, 7),
            (5, 6),
            (4, 9),
            (0, 4),
            (4, 2),
            (1, 2),
            (2, 3),
        ],
        genus: 6,
        cycle_rows: &[
            &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 1, 0],
            &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1],
            &[0, 0, 1, 0, 0, 0, 0, 1, 0, -1, -1, 0, 1, -1, 0],
            &[0, 0, 0, 1, 0, 0, 1, 1, 0, 0, -1, 0, 1, 0, 1],
            &[0, 0, 0, 0, 1, 0, 0, -1, -1, 1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0],
        ],
        gram: &[
            &[2, 1, 1, 0, 0, 0],
            &[1, 2, 1, -1, 0, 0],
            &[1, 1, 2, -1, 1, 1],
            &[0, -1, -1, 2, 0, -1],
            &[0, 0, 1, 0, 2, 1],
            &[0, 0, 1, -1, 1, 2],
        ],
    },
    ReferenceData {
        name: "F11",
        vertices: 12,
        edges: &[
            (0, 1),
            (1, 2),
            (0, 3),
            (6, 7),
            (7, 8),
            (6, 10),
            (10, 8),
            (9, 8),
            (6, 9),
            (11, 10),
            (11, 9),
            (3, 11),
            (3, 2),
            (0, 4),
            (4, 2),
            (4, 5),
            (1, 5),
            (5, 7),
        ],
        genus: 7,
        cycle_rows: &[
            &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, -1, 1, 0],
            &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 1, -1, 0],
            &[0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, -1, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 1, 1, -1, 0, 1, -1, 0, -1],
            &[0, 0, 0, 0, 1, 0, 0, -1, 0, 0, -1, -1, 1, 0, -1, 1, 0, 1],
            &[0, 0, 0, 0, 0, 1, 0, 0, -1, -1, 1, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1, -1, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0],
        ],
        gram: &[
            &[2, 1, -1, 0, 0, -1, -1],
            &[1, 2, 0, 1, 0, -1, 0],
            &[-1, 0, 2, 1, 0, 0, 1],
            &[0, 1, 1, 2, 1, -1, 0],
            &[0, 0, 0, 1, 2, -1, -1],
            &[-1, -1, 0, -1, -1, 2, 1],
            &[-1, 0, 1, 0, -1, 1, 2],
        ],
    },
    ReferenceData {
        name: "F12",
        vertices: 12,
        edges: &[
            (7, 1),
            (11, 3),
            (9, 4),
            (10, 0),
            (2, 1),
            (5, 6),
            (11, 8),
            (11, 5),
            (5, 9),
            (9, 8),
            (8, 7),
            (7, 6),
            (6, 10),
            (10, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (0, 1),
        ],
        genus: 7,
        cycle_rows: &[
            &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, -1, -1, -1, -1, -1],
            &[0, 1, 0, 0, 0, 0, 0, -1, -1, -1, -1, -1, -1, -1, -1, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0, 0, 0, -1, -1, -1, -1, -1, -1, -1, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, -1, -1, 0],
            &[0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, -1, -1],
            &[0, 0, 0, 0, 0, 1, 0, 0, -1, -1, -1, -1, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0],
        ],
        gram: &[
            &[2, 0, -1, 0, -1, 0, 0],
            &[0, 2, -1, -1, 1, 0, -1],
            &[-1, -1, 2, 0, 0, -1, 1],
            &[0, -1, 0, 2, -1, 0, 0],
            &[-1, 1, 0, -1, 2, 0, 0],
            &[0, 0, -1, 0, 0, 2, -1],
            &[0, -1, 1, 0, 0, -1, 2],
        ],
    },
    ReferenceData {
        name: "F13",
        vertices: 12,
        edges: &[
            (0, 1),
            (5, 4),
            (6, 4),
            (2, 7),
            (3, 10),
            (11, 7),
            (11, 10),
            (11, 0),
            (0, 5),
            (5, 9),
            (6, 1),
            (8, 6),
            (1, 2),
            (3, 4),
            (2, 3),
            (8, 7),
            (9, 10),
            (9, 8),
        ],
        genus: 7,
        cycle_rows: &[
            &[1, 0, 0, 0, 0, 0, 0, 0, -1, -1, -1, -1, 0, 0, 0, 0, 0, -1],
            &[0, 1, 0, 0, 0, 0, 0, 0, 0, -1, -1, -1, -1, -1, -1, 0, 0, -1],
            &[0, 0, 1, 0, 0, 0, 0, 0, 0, 0, -1, 0, -1, -1, -1, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, -1, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 1, 0, 1, 0, -1, 1],
            &[0, 0, 0, 0, 0, 1, 0, -1, -1, -1, 0, 0, 0, 0, 0, -1, 0, -1],
            &[0, 0, 0, 0, 0, 0, 1, -1, -1, -1, 0, 0, 0, 0, 0, 0, -1, 0],
        ],
        gram: &[
            &[2, 0, 0, 0, 1, 0, -1],
            &[0, 2, -1, 0, 1, -1, 0],
            &[0, -1, 2, 0, 0, 0, 0],
            &[0, 0, 0, 2, -1, -1, 1],
            &[1, 1, 0, -1, 2, 0, -1],
            &[0, -1, 0, -1, 0, 2, -1],
            &[-1, 0, 0, 1, -1, -1, 2],
        ],
    },
    ReferenceData {
        name: "F14",
        vertices: 12,
        edges: &[
            (6, 8),
            (5, 11),
            (0, 9),
            (4, 3),
            (3, 10),
            (10, 9),
            (0, 5),
            (1, 0),
            (1, 6),
            (6, 4),
            (4, 5),
            (1, 2),
            (2, 3),
            (2, 7),
            (7, 11),
            (11, 10),
            (7, 8),
            (8, 9),
        ],
        genus: 7,
        cycle_rows: &[
            &[1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0, -1, 0, 0, -1, 0],
            &[0, 1, 0, 0, 0, 0, 0, 0, 1, 1, 1, -1, 0, -1, -1, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, -1, 0, -1, 0, 0, -1, -1],
            &[0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, -1, -1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, -1, -1, -1, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, -1, -1],
            &[0, 0, 0, 0, 0, 0, 1, 1, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0],
        ],
        gram: &[
            &[2, -1, -1, 0, 0, 0, 0],
            &[-1, 2, 0, -1, -1, 0, 1],
            &[-1, 0, 2, 0, 0, -1, -1],
            &[0, -1, 0, 2, 1, 0, 0],
            &[0, -1, 0, 1, 2, 1, -1],
            &[0, 0, -1, 0, 1, 2, 0],
            &[0, 1, -1, 0, -1, 0, 2],
        ],
    },
    ReferenceData {
        name: "G1",
        vertices: 12,
        edges: &[
            (0, 3),
            (2, 3),
            (2, 1),
            (1, 7),
            (7, 6),
            (6, 9),
            (9, 8),
            (7, 8),
            (8, 10),
            (6, 10),
            (10, 5),
            (5, 4),
            (4, 0),
            (0, 1),
            (4, 2),
            (3, 11),
            (11, 9),
            (11, 5),
        ],
        genus: 7,
        cycle_rows: &[
            &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 1],
            &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 1],
            &[0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 1, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 1, 1, 1, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0, -1, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0, 0, 0, -1, -1, 0, 0, 0, 0, 0, -1, 1],
            &[0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1, -1],
        ],
        gram: &[
            &[2, -1, 1, 0, 1, 1, 1],
            &[-1, 2, -1, -1, -1, -1, 0],
            &[1, -1, 2, 1, 1, 1, 0],
            &[0, -1, 1, 2, 1, 0, -1],
            &[1, -1, 1, 1, 2, 1, 0],
            &[1, -1, 1, 0, 1, 2, 1],
            &[1, 0, 0, -1, 0, 1, 2],
        ],
    },
    ReferenceData {
        name: "G2",
        vertices: 12,
        edges: &[
            (0, 11),
            (11, 1),
            (0, 3),
            (3, 9),
            (9, 8),
            (7, 8),
            (1, 7),
            (0, 5),
            (11, 5),
            (5, 4),
            (4, 2),
            (4, 10),
            (1, 2),
            (3, 2),
            (6, 9),
            (6, 7),
            (6, 10),
            (10, 8),
        ],
        genus: 7,
        cycle_rows: &[
            &[1, 0, 0, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0, 0, 0, -1, -1, -1, 0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0, -1, 0, -1, -1, 0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, -1, 0, -1, -1, 0, 1, 0],
            &[0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, -1],
            &[0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, -1],
            &[0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, -1, -1, 0, 0, -1, 1, 0],
        ],
        gram: &[
            &[2, 1, -1, 0, 0, 0, 0],
            &[1, 2, -1, -1, 0, 0, 1],
            &[-1, -1, 2, 1, 0, 0, 0],
            &[0, -1, 1, 2, 1, -1, -1],
            &[0, 0, 0, 1, 2, -1, 0],
            &[0, 0, 0, -1, -1, 2, 1],
            &[0, 1, 0, -1, 0, 1, 2],
        ],
    },
    ReferenceData {
        name: "G3",
        vertices: 12,
        edges: &[
            (0, 5),
            (0, 3),
            (5, 1),
            (3, 9),
            (1, 7),
            (7, 8),
            (9, 8),
            (5, 11),
            (1, 11),
            (11, 2),
            (0, 4),
            (4, 2),
            (4, 10),
            (3, 2),
            (6, 7),
            (6, 10),
            (10, 8),
            (6, 9),
        ],
        genus: 7,
        cycle_rows: &[
            &[1, 0, 0, 0, 0, 0, 0, 1, 0, 1, -1, -1, 0, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0, 1, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, -1, -1, 0, 1, 0, -1],
            &[0, 0, 0, 0, 1, 0, 0, 0, -1, -1, 0, 1, -1, 0, -1, 1, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, -1, 0],
            &[0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 1],
        ],
        gram: &[
            &[2, -1, 1, -1, 1, 0, 0],
            &[-1, 2, 0, 1, 0, 0, 0],
            &[1, 0, 2, 0, 1, 0, 0],
            &[-1, 1, 0, 2, -1, -1, 1],
            &[1, 0, 1, -1, 2, 1, 0],
            &[0, 0, 0, -1, 1, 2, -1],
            &[0, 0, 0, 1, 0, -1, 2],
        ],
    },
    ReferenceData {
        name: "G4",
        vertices: 12,
        edges: &[
            (0, 1),
            (4, 11),
            (11, 2),
            (4, 10),
            (7, 1),
            (7, 8),
            (10, 8),
            (1, 2),
            (2, 3),
            (3, 5),
            (5, 0),
            (11, 5),
            (0, 4),
            (10, 6),
            (9, 6),
            (3, 9),
            (6, 7),
            (8, 9),
        ],
        genus: 7,
        cycle_rows: &[
            &[1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 0, -1, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1, -1, -1, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 1, 1, 1, 0],
            &[0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1],
            &[0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 1, 0, 0, 1],
        ],
        gram: &[
            &[2, 0, 0, -1, -1, 0, -1],
            &[0, 2, 1, -1, -1, 0, 0],
            &[0, 1, 2, -1, -1, 0, 0],
            &[-1, -1, -1, 2, 1, 0, 1],
            &[-1, -1, -1, 1, 2, -1, 1],
            &[0, 0, 0, 0, -1, 2, -1],
            &[-1, 0, 0, 1, 1, -1, 2],
        ],
    },
    ReferenceData {
        name: "G5",
        vertices: 12,
        edges: &[
            (1, 7),
            (1, 2),
            (4, 10),
            (6, 7),
            (4, 2),
            (6, 10),
            (11, 5),
            (7, 8),
            (8, 9),
            (9, 3),
            (3, 0),
            (0, 1),
            (2, 5),
            (5, 3),
            (10, 8),
            (0, 4),
            (9, 11),
            (11, 6),
        ],
        genus: 7,
        cycle_rows: &[
            &[1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 1],
            &[0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 1],
            &[0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 1, 0, 0, 1, 0],
        ],
        gram: &[
            &[2, -1, 0, -1, 0, 0, 1],
            &[-1, 2, 0, 0, -1, 0, 0],
            &[0, 0, 2, 0, -1, -1, 1],
            &[-1, 0, 0, 2, 0, -1, 0],
            &[0, -1, -1, 0, 2, 1, -1],
            &[0, 0, -1, -1, 1, 2, -1],
            &[1, 0, 1, 0, -1, -1, 2],
        ],
    },
    ReferenceData {
        name: "G6",
        vertices: 12,
        edges: &[
            (1, 7),
            (5, 11),
            (3, 9),
            (2, 1),
            (3, 5),
            (7, 11),
            (6, 9),
            (4, 10),
            (1, 0),
            (0, 3),
            (5, 2),
            (0, 4),
            (4, 2),
            (8, 7),
            (11, 6),
            (9, 8),
            (6, 10),
            (10, 8),
        ],
        genus: 7,
        cycle_rows: &[
            &[1, 0, 0, 0, 0, 0, 0, -1, -1, 0, 0, -1, 0, -1, 0, 0, 0, -1],
            &[0, 1, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0, 1, 0, 1, 0, 1, 0],
            &[0, 0, 1, 0, 0, 0, 0, -1, 0, 1, 0, -1, 0, 0, 0, 1, 0, -1],
            &[0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, -1, -1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1],
            &[0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, -1],
        ],
        gram: &[
            &[2, -1, -1, 1, 0, 1, 0],
            &[-1, 2, 0, -1, 1, -1, 0],
            &[-1, 0, 2, 0, -1, -1, -1],
            &[1, -1, 0, 2, 0, 0, -1],
            &[0, 1, -1, 0, 2, 0, 0],
            &[1, -1, -1, 0, 0, 2, 1],
            &[0, 0, -1, -1, 0, 1, 2],
        ],
    },
    ReferenceData {
        name: "G7",
        vertices: 12,
        edges: &[
            (1, 7),
            (3, 11),
            (5, 11),
            (1, 0),
            (5, 3),
            (7, 6),
            (6, 9),
            (4, 10),
            (11, 9),
            (0, 4),
            (0, 5),
            (4, 2),
            (3, 2),
            (6, 10),
            (10, 8),
            (9, 8),
            (8, 7),
            (2, 1),
        ],
        genus: 7,
        cycle_rows: &[
            &[1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 1, 0, 0, -1, 0, -1, 1],
            &[0, 1, 0, 0, 0, 0, 0, -1, 1, 0, 0, 1, -1, 0, -1, 1, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0, -1, 1, -1, 1, 0, 0, 0, -1, 1, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1],
            &[0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 1, -1, 1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, -1, 1, 0, 0],
        ],
        gram: &[
            &[2, -1, 0, -1, -1, 1, 0],
            &[-1, 2, -1, 0, 1, -1, -1],
            &[0, -1, 2, 0, -1, 0, 0],
            &[-1, 0, 0, 2, 1, -1, 0],
            &[-1, 1, -1, 1, 2, -1, 0],
            &[1, -1, 0, -1, -1, 2, 1],
            &[0, -1, 0, 0, 0, 1, 2],
        ],
    },
    ReferenceData {
        name: "G8",
        vertices: 12,
        edges: &[
            (0, 3),
            (0, 4),
            (3, 11),
            (11, 9),
            (4, 10),
            (10, 8),
            (9, 8),
            (0, 5),
            (5, 11),
            (5, 1),
            (1, 7),
            (4, 2),
            (1, 2),
            (3, 2),
            (6, 9),
            (6, 10),
            (6, 7),
            (7, 8),
        ],
        genus: 7,
        cycle_rows: &[
            &[1, 0, 0, 0, 0, 0, 0, -1, 0, -1, 0, 0, -1, 1, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0, 0, -1, 0, -1, 0, 1, -1, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0, 0, -1, 1, 0, 0, 1, -1, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0, 1, -1, -1, 0, 0, 0, -1, 0, 1, 0],
            &[0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1, -1, 1, 0, 0, -1, 1, 0],
            &[0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, -1],
            &[0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, -1],
        ],
        gram: &[
            &[2, -1, 1, 0, 0, 0, 0],
            &[-1, 2, 0, 0, 1, 0, 0],
            &[1, 0, 2, 1, 0, 0, 0],
            &[0, 0, 1, 2, -1, -1, 1],
            &[0, 1, 0, -1, 2, 1, 0],
            &[0, 0, 0, -1, 1, 2, -1],
            &[0, 0, 0, 1, 0, -1, 2],
        ],
    },
    ReferenceData {
        name: "G9",
        vertices: 12,
        edges: &[
            (3, 0),
            (0, 1),
            (5, 11),
            (4, 10),
            (3, 9),
            (9, 6),
            (6, 7),
            (0, 4),
            (4, 2),
            (2, 3),
            (1, 2),
            (1, 5),
            (5, 11),
            (11, 7),
            (7, 8),
            (10, 8),
            (6, 10),
            (8, 9),
        ],
        genus: 7,
        cycle_rows: &[
            &[1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0, 0, -1, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 1, -1, -1, -1, -1, 1, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, -1, -1, -1, -1, 0, 0, -1],
            &[0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1],
            &[0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, -1, -1, 0],
        ],
        gram: &[
            &[2, 1, 0, 1, -1, 0, 0],
            &[1, 2, 1, 0, -1, 0, 0],
            &[0, 1, 2, -1, 0, 1, 0],
            &[1, 0, -1, 2, -1, -1, 0],
            &[-1, -1, 0, -1, 2, 1, 1],
            &[0, 0, 1, -1, 1, 2, 1],
            &[0, 0, 0, 0, 1, 1, 2],
        ],
    },
    ReferenceData {
        name: "G10",
        vertices: 12,
        edges: &[
            (3, 0),
            (0, 4),
            (5, 11),
            (4, 10),
            (3, 9),
            (9, 6),
            (6, 10),
            (10, 8),
            (8, 9),
            (6, 7),
            (7, 8),
            (1, 7),
            (0, 5),
            (5, 11),
            (11, 1),
            (1, 2),
            (2, 3),
            (4, 2),
        ],
        genus: 7,
        cycle_rows: &[
            &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 0],
            &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, -1, -1, 0, 1],
            &[0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 1, 0, 0, -1, -1, 0, 0, 0, 1, 0, -1],
            &[0, 0, 0, 0, 1, 0, 0, 0, -1, 0, -1, -1, 0, 0, 0, 1, 1, 0],
            &[0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1, 1, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0],
        ],
        gram: &[
            &[2, 1, 1, 1, -1, 0, 0],
            &[1, 2, 0, 1, 0, 0, 0],
            &[1, 0, 2, 0, 0, 0, 0],
            &[1, 1, 0, 2, -1, 0, -1],
            &[-1, 0, 0, -1, 2, 1, 1],
            &[0, 0, 0, 0, 1, 2, 1],
            &[0, 0, 0, -1, 1, 1, 2],
        ],
    },
];

pub(super) static E42_EDGES: &[(u32, u32)] = &[
    (0, 1),
    (1, 2),
    (2, 3),
    (3, 0),
    (6, 7),
    (7, 8),
    (8, 9),
    (9, 6),
    (0, 4),
    (4, 2),
    (6, 10),
    (10, 8),
    (1, 5),
    (4, 5),
    (3, 5),
    (7, 11),
    (10, 11),
    (9, 11),
];
