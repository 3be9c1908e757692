from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, model_validator

from cpmackey.abgrp import AbHom, FgAbGroup, IntegerMatrix, make_ab_hom
from cpmackey.mackey import CpMackeyFunctor, MackeyHom, mackey_from_matrices, make_mackey_hom

SCHEMA_VERSION = 1


class _Document(BaseModel):
    model_config = ConfigDict(populate_by_name=True)


class MatrixDocument(_Document):
    rows: int = Field(ge=0, description="Number of rows")
    cols: int = Field(ge=0, description="Number of columns")
    entries: List[List[int]] = Field(
        default_factory=list, description="Row-major nested integer arrays"
    )

    @model_validator(mode="after")
    def check_shape(self) -> "MatrixDocument":
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError(
                f"entries do not form a {self.rows}x{self.cols} matrix"
            )
        return self

    @classmethod
    def from_matrix(cls, m: IntegerMatrix) -> "MatrixDocument":
        return cls(rows=m.rows, cols=m.cols, entries=m.to_rows())

    def to_matrix(self) -> IntegerMatrix:
        return IntegerMatrix.from_rows(self.entries, cols=self.cols) if self.rows else IntegerMatrix.zero(0, self.cols)


class MackeyDocument(_Document):
    schema_version: Literal[1] = Field(default=SCHEMA_VERSION, alias="schema")
    prime: int = Field(description="Prime order of the group")
    fixed_relations: MatrixDocument = Field(
        alias="fixedRelations", description="Relations of the fixed level, one column each"
    )
    underlying_relations: MatrixDocument = Field(
        alias="underlyingRelations", description="Relations of the underlying level"
    )
    res: MatrixDocument
    tr: MatrixDocument
    conj: MatrixDocument
    name: Optional[str] = Field(default=None, description="Optional label")

    @classmethod
    def from_functor(cls, m: CpMackeyFunctor, name: Optional[str] = None) -> "MackeyDocument":
        return cls(
            prime=m.prime,
            fixed_relations=MatrixDocument.from_matrix(m.fixed.relations),
            underlying_relations=MatrixDocument.from_matrix(m.underlying.relations),
            res=MatrixDocument.from_matrix(m.res.matrix),
            tr=MatrixDocument.from_matrix(m.tr.matrix),
            conj=MatrixDocument.from_matrix(m.conj.matrix),
            name=name,
        )

    def to_functor(self) -> CpMackeyFunctor:
        """Rebuild the functor; runs the full axiom validation."""
        fixed_rel = self.fixed_relations.to_matrix()
        und_rel = self.underlying_relations.to_matrix()
        return mackey_from_matrices(
            self.prime,
            FgAbGroup(fixed_rel.rows, fixed_rel),
            FgAbGroup(und_rel.rows, und_rel),
            self.res.to_matrix(),
            self.tr.to_matrix(),
            self.conj.to_matrix(),
        )

    def dump(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)


class HomDocument(_Document):
    schema_version: Literal[1] = Field(default=SCHEMA_VERSION, alias="schema")
    source: MackeyDocument
    target: MackeyDocument
    fixed_map: MatrixDocument = Field(alias="fixedMap")
    underlying_map: MatrixDocument = Field(alias="underlyingMap")

    @classmethod
    def from_hom(cls, f: MackeyHom) -> "HomDocument":
        return cls(
            source=MackeyDocument.from_functor(f.source),
            target=MackeyDocument.from_functor(f.target),
            fixed_map=MatrixDocument.from_matrix(f.fixed_map.matrix),
            underlying_map=MatrixDocument.from_matrix(f.underlying_map.matrix),
        )

    def to_hom(self) -> MackeyHom:
        return make_mackey_hom(
            self.source.to_functor(),
            self.target.to_functor(),
            self.fixed_map.to_matrix(),
            self.underlying_map.to_matrix(),
        )


class ModuleDocument(_Document):
    """A C_p-module (X, c) for the fixed-point and orbit constructors."""

    relations: MatrixDocument = Field(description="Relations of X, one row per generator")
    conj: MatrixDocument = Field(description="Action of the generator of C_p on X")

    def to_ab_hom(self) -> AbHom:
        rels = self.relations.to_matrix()
        group = FgAbGroup(rels.rows, rels)
        return make_ab_hom(group, group, self.conj.to_matrix())


HomDocumentList = TypeAdapter(List[HomDocument])


class LevelInvariants(_Document):
    fixed: List[int] = Field(description="Invariant factors of the fixed level, 0 per free summand")
    underlying: List[int] = Field(description="Invariant factors of the underlying level")


class SampleRecord(_Document):
    index: int
    seed_a: Optional[int] = Field(default=None, alias="seedA")
    seed_b: Optional[int] = Field(default=None, alias="seedB")
    ext_invariants: Dict[int, LevelInvariants] = Field(
        alias="extInvariants", description="Pruned invariants per degree"
    )
    matches_at_shift4: Dict[int, bool] = Field(
        alias="matchesAtShift4",
        description="Degree n -> whether degree n + 4 has the same level invariants",
    )
    seconds: float = Field(default=0.0, description="Wall time spent on the sample")


class PeriodicityReport(_Document):
    schema_version: Literal[1] = Field(default=SCHEMA_VERSION, alias="schema")
    prime: int
    functor: Literal["ext", "tor"] = "ext"
    sample_count: int = Field(alias="sampleCount", ge=1)
    degree_range: List[int] = Field(alias="degreeRange", min_length=2, max_length=2)
    base_seed: Optional[int] = Field(default=None, alias="baseSeed")
    per_sample: List[SampleRecord] = Field(alias="perSample")
    summary: float = Field(
        description="Fraction of (sample, degree) pairs whose shift-by-4 invariants agree"
    )

    @model_validator(mode="after")
    def check_range(self) -> "PeriodicityReport":
        n0, n1 = self.degree_range
        if n1 < n0 + 4:
            raise ValueError("degree range must span at least four degrees")
        return self

    def dump(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)
