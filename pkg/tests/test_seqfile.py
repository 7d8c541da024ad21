"""Sequence file format: parsing, rendering, and the shipped example."""

from pathlib import Path

import pytest

from cliffk.abgroup import (
    FGAbelianGroup,
    GroupHom,
    UnknownGroup,
    UnknownMap,
    check_exact,
    solve_exact,
)
from cliffk.errors import SequenceParseError
from cliffk.seqfile import SequenceFile, parse_sequence_file

SHIPPED = Path(__file__).resolve().parent.parent / "sequences" / "bott_degree0.seq"

BASIC = """\
term A = Z
term B = Z
term C = Z/2
term D = 0
map f : A -> B = [[2]]
map g : B -> C = [[1]]
map h : C -> D = [[0]]
check exact at B, C
"""


class TestParsing:
    def test_basic_file(self):
        sf = parse_sequence_file(BASIC)
        assert sf.term_names == ("A", "B", "C", "D")
        assert sf.terms == (
            FGAbelianGroup.free(1), FGAbelianGroup.free(1),
            FGAbelianGroup.from_invariants(0, (2,)), FGAbelianGroup.trivial())
        assert sf.map_names == ("f", "g", "h")
        assert sf.maps[0].matrix == ((2,),)
        assert sf.check_at == ("B", "C")
        assert sf.solve_bound is None
        assert not sf.has_unknowns

    def test_group_expressions(self):
        text = ("term A = Z^2 + Z/2 + Z/4\n"
                "term B = Z/3 + Z/2\n"
                "map f : A -> B = [[0]]\n")
        sf = parse_sequence_file(text)
        assert sf.terms[0] == FGAbelianGroup.from_invariants(2, (2, 4))
        # non-chain factor lists canonicalize on the way in
        assert sf.terms[1] == FGAbelianGroup.from_invariants(0, (6,))

    def test_comments_blank_lines_and_crlf(self):
        text = ("# leading comment\r\n"
                "term A = Z  # trailing comment\r\n"
                "\r\n"
                "term B = Z/2\r\n"
                "map f : A -> B = [[1]]  # the surjection\r\n")
        sf = parse_sequence_file(text)
        assert sf.term_names == ("A", "B")
        assert sf.maps[0].matrix == ((1,),)

    def test_unknown_map_and_term(self):
        text = ("term A = Z\n"
                "term B = unknown{0, Z, Z/2}\n"
                "term C = 0\n"
                "map f : A -> B = unknown\n"
                "map g : B -> C = unknown\n"
                "check exact at B\n"
                "solve bound = 2\n")
        sf = parse_sequence_file(text)
        assert sf.has_unknowns
        assert isinstance(sf.terms[1], UnknownGroup)
        assert [str(g) for g in sf.terms[1].candidates] == ["0", "Z", "Z/2"]
        assert isinstance(sf.maps[0], UnknownMap)
        assert sf.solve_bound == 2

    def test_zero_matrix_any_shape(self):
        text = ("term A = Z^2\n"
                "term B = 0\n"
                "map f : A -> B = [[0, 0]]\n")
        sf = parse_sequence_file(text)
        assert sf.maps[0] == GroupHom.zero(FGAbelianGroup.free(2),
                                           FGAbelianGroup.trivial())

    def test_checks_deduplicate_and_sort_by_position(self):
        text = BASIC.replace("check exact at B, C", "check exact at C, B, C")
        sf = parse_sequence_file(text)
        assert sf.check_at == ("B", "C")

    def test_to_sequence_positions(self):
        seq = parse_sequence_file(BASIC).to_sequence()
        assert seq.exact_at == (1, 2)
        assert check_exact(seq, 1)
        assert check_exact(seq, 2)


class TestParseErrors:
    @pytest.mark.parametrize("text,line,fragment", [
        ("term A = Z\nterm A = Z\nmap f : A -> A = [[1]]\n", 2, "duplicate term"),
        ("term A = Z\nterm B = Z\nmap f : A -> B = [[1]]\n"
         "map f : A -> B = [[1]]\n", 4, "duplicate map"),
        ("term A = Z\nterm B = Z\nmap f : B -> A = [[1]]\n", 3,
         "declaration order"),
        ("term A = Q\nterm B = Z\nmap f : A -> B = [[1]]\n", 1,
         "cannot parse group"),
        ("term A = Z/1\nterm B = Z\nmap f : A -> B = [[1]]\n", 1,
         "torsion order"),
        ("term A = Z\nterm B = Z\nmap f : A -> B = [[1], [2]\n", 3,
         "cannot parse matrix"),
        ("term A = Z\nterm B = Z\nmap f : A -> B = [[1], [1, 2]]\n", 3,
         "different lengths"),
        ("term A = Z\nterm B = Z\nmap f : A -> B = [[True]]\n", 3,
         "integer rows"),
        ("term A = Z\nterm B = Z^2\nmap f : A -> B = [[1]]\n", 3,
         "must be 2 x 1"),
        ("term A = Z/2\nterm B = Z\nmap f : A -> B = [[1]]\n", 3,
         "maps outside its order"),
        ("term A = Z\nterm B = unknown{Z}\nmap f : A -> B = [[1]]\n", 3,
         "unknown endpoint"),
        ("term A = Z\nterm B = Z\nmap f : A -> B = [[1]]\n"
         "check exact at X\n", 4, "unknown term"),
        ("term A = Z\nterm B = Z\nmap f : A -> B = [[1]]\n"
         "check exact at A\n", 4, "not an interior position"),
        ("term A = Z\nterm B = Z\nmap f : A -> B = [[1]]\n"
         "solve bound = 0\n", 4, "must be positive"),
        ("term A = Z\nterm B = Z\nmap f : A -> B = [[1]]\n"
         "solve bound = 2\nsolve bound = 2\n", 5, "duplicate solve"),
        ("wibble\n", 1, "cannot parse line"),
        ("term A = Z\n", 1, "at least two terms"),
        ("term A = Z\nterm B = Z\n", 2, "found 0"),
        ("term A = unknown{}\nterm B = Z\nmap f : A -> B = unknown\n", 1,
         "at least one candidate"),
    ])
    def test_line_numbers_and_messages(self, text, line, fragment):
        with pytest.raises(SequenceParseError) as exc:
            parse_sequence_file(text)
        assert exc.value.line == line
        assert fragment in exc.value.message


class TestRendering:
    def test_round_trip_basic(self):
        sf = parse_sequence_file(BASIC)
        assert parse_sequence_file(sf.render()) == sf

    def test_round_trip_with_unknowns(self):
        text = ("term A = Z\n"
                "term B = unknown{0, Z + Z/2}\n"
                "term C = 0\n"
                "map f : A -> B = unknown\n"
                "map g : B -> C = unknown\n"
                "check exact at B\n"
                "solve bound = 3\n")
        sf = parse_sequence_file(text)
        rendered = sf.render()
        assert "term B = unknown{0, Z + Z/2}" in rendered
        assert "map f : A -> B = unknown" in rendered
        assert "solve bound = 3" in rendered
        assert parse_sequence_file(rendered) == sf

    def test_degenerate_matrices_render_as_zero(self):
        text = ("term A = Z\n"
                "term B = 0\n"
                "term C = Z/2\n"
                "map f : A -> B = [[0]]\n"
                "map g : B -> C = [[0]]\n")
        sf = parse_sequence_file(text)
        rendered = sf.render()
        assert "map f : A -> B = [[0]]" in rendered
        assert "map g : B -> C = [[0]]" in rendered
        assert parse_sequence_file(rendered) == sf


class TestShippedFile:
    def test_parses_and_is_exact(self):
        sf = parse_sequence_file(SHIPPED.read_text())
        assert sf.term_names == ("KU0", "KO0", "KOm1", "KU1")
        assert sf.check_at == ("KO0", "KOm1")
        assert not sf.has_unknowns
        seq = sf.to_sequence()
        assert all(check_exact(seq, pos) for pos in seq.exact_at)

    def test_matches_solver_output(self):
        # the shipped assignment is one of the two the solver finds when the
        # maps are left unknown
        sf = parse_sequence_file(SHIPPED.read_text())
        unknown = SequenceFile(sf.term_names, sf.terms, sf.map_names,
                               (UnknownMap(), UnknownMap(), UnknownMap()),
                               sf.check_at, 2)
        sols = solve_exact(unknown.to_sequence(), bound=2)
        shipped_matrices = tuple(m.matrix for m in sf.maps)
        assert shipped_matrices in [tuple(m.matrix for m in s.maps)
                                    for s in sols]
