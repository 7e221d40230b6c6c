import pytest

from turanlab.planar_core import Graph, build_embedding, embedding_from_faces


@pytest.fixture(scope="session")
def c7():
    return build_embedding([[(i - 1) % 7, (i + 1) % 7] for i in range(7)])


@pytest.fixture(scope="session")
def k4():
    return embedding_from_faces(4, [[0, 1, 2], [0, 2, 3], [0, 3, 1], [1, 3, 2]])


@pytest.fixture(scope="session")
def octahedron_graph():
    return Graph(
        6,
        [(0, 1), (0, 2), (0, 4), (0, 5), (1, 2), (1, 3), (1, 5), (2, 3), (2, 4),
         (3, 4), (3, 5), (4, 5)],
    )


@pytest.fixture(scope="session")
def stacked_triangulation6():
    # K4 with two successive vertex insertions into triangular faces.
    return embedding_from_faces(
        6,
        [[0, 1, 5], [1, 4, 5], [0, 5, 4], [1, 2, 4], [0, 4, 2], [0, 2, 3],
         [0, 3, 1], [1, 3, 2]],
    )


@pytest.fixture(scope="session")
def cube():
    return embedding_from_faces(
        8,
        [[0, 1, 2, 3], [7, 6, 5, 4], [0, 4, 5, 1], [1, 5, 6, 2], [2, 6, 7, 3],
         [3, 7, 4, 0]],
    )


@pytest.fixture(scope="session")
def two_bump_ring():
    """9-cycle with 9-edge five-vertex blocks glued inside on edges (4,5), (0,1).

    The inner face walks 11 darts but collapses to effective length 9.
    """
    faces = [
        list(range(9)),
        [0, 12, 1, 2, 3, 4, 9, 5, 6, 7, 8],
        [4, 5, 11], [4, 11, 10], [5, 10, 11], [4, 10, 9], [5, 9, 10],
        [0, 1, 14], [0, 14, 13], [1, 13, 14], [0, 13, 12], [1, 12, 13],
    ]
    return embedding_from_faces(15, faces)


@pytest.fixture(scope="session")
def b5d_host():
    """Hypothesis-satisfying host: a B5d sharing a 2-path with a 4-face.

    Vertices 0-4 form the B5d, 5 is the fourth vertex of the 4-face, and two
    nine-edge blocks (6-10, 11-15) run from 5 back to vertex 1 so that every
    degree is at least 3 without creating a 6-cycle.
    """
    faces = [
        [0, 1, 2], [0, 2, 4], [0, 4, 3], [2, 3, 4],
        [0, 3, 2, 5],
        [5, 6, 10, 11, 15, 1, 0],
        [5, 6, 7, 10, 11, 12, 15, 1, 2],
        [6, 10, 9], [6, 9, 8], [10, 8, 9], [6, 8, 7], [10, 7, 8],
        [11, 15, 14], [11, 14, 13], [15, 13, 14], [11, 13, 12], [15, 12, 13],
    ]
    return embedding_from_faces(16, faces)


@pytest.fixture(scope="session")
def b4b_two_four_faces():
    """A B4b whose two designated 2-paths both border 4-faces.

    Not hypothesis-satisfying (two corners have degree 2) but exactly the
    local configuration whose score tops out at 4/3.
    """
    faces = [
        [0, 1, 3], [1, 2, 3],
        [0, 3, 2, 4],
        [2, 1, 0, 5],
        [0, 4, 2, 5],
    ]
    return embedding_from_faces(6, faces)
