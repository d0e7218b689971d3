"""Concrete cone instances fed to the law checker, and negative controls."""
from fractions import Fraction

from .cone_axioms import ConeInstance
from .indexed_cone import (INF_ELEM, ZERO_ELEM, member, p_add, p_le_v,
                           p_order, p_smul, rbar_le_v)
from .sampling import (boundary_elems, boundary_ext, draw_elem, draw_ext,
                       draw_member, draw_int, related_elem, related_ext)
from .scalars import ExtScalar, ext_add, ext_le, ext_mul

__all__ = ['p_instance', 'qj_instance', 'rbar_instance',
           'broken_commutative_instance', 'broken_preorder_instance',
           'broken_relation_instance']


def p_instance(cfg=None) -> ConeInstance:
    boundary = boundary_elems(cfg) if cfg is not None else [ZERO_ELEM, INF_ELEM]
    return ConeInstance(
        name='P',
        sample=draw_elem,
        add=p_add,
        scale=p_smul,
        zero=ZERO_ELEM,
        preorder=p_order,
        v_relation=p_le_v,
        boundary=boundary,
        related=related_elem,
    )


def qj_instance(j: int, cfg=None) -> ConeInstance:
    """The subcone Q_j: index-j members together with 0_0 and inf_inf."""

    def sample(rng, cfg):
        roll = draw_int(rng, 0, 9)
        if roll == 0:
            return ZERO_ELEM
        if roll == 1:
            return INF_ELEM
        return draw_member(rng, cfg, index=j)

    def related(rng, cfg, y, v):
        x = related_elem(rng, cfg, y, v)
        return x if not x.is_member or x.index == j else member(x.value, j)

    return ConeInstance(
        name=f'Q_{j}',
        sample=sample,
        add=p_add,
        scale=p_smul,
        zero=ZERO_ELEM,
        preorder=p_order,
        v_relation=p_le_v,
        boundary=[ZERO_ELEM, INF_ELEM, member(1, j), member(Fraction(1, 2), j), member(j, j)],
        related=related,
    )


def rbar_instance(cfg=None) -> ConeInstance:
    """[0, +inf] with radii ``eps > 0`` and ``x <= y + eps``."""
    return ConeInstance(
        name='Rbar+',
        sample=draw_ext,
        add=ext_add,
        scale=ext_mul,
        zero=ExtScalar(0),
        preorder=ext_le,
        v_relation=rbar_le_v,
        boundary=boundary_ext(),
        related=related_ext,
    )


def broken_commutative_instance(cfg=None) -> ConeInstance:
    """P with addition replaced by the left projection."""
    inst = p_instance(cfg)
    inst.name = 'P[add=left]'
    inst.add = lambda x, y: x
    return inst


def broken_preorder_instance(cfg=None) -> ConeInstance:
    """[0, +inf] with the strict order in place of the preorder."""
    inst = rbar_instance(cfg)
    inst.name = 'Rbar+[strict]'
    inst.preorder = lambda x, y: ext_le(x, y) and x != y
    return inst


def broken_relation_instance(cfg=None) -> ConeInstance:
    """P with a neighborhood relation that never holds."""
    inst = p_instance(cfg)
    inst.name = 'P[relation=false]'
    inst.v_relation = lambda x, y, v: False
    return inst
