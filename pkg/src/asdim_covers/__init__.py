"""Constructive bounded covers of graphs with exact verification."""

from .covers import Cover, CoverSet, annulus_cover, cactus_cover, coarse_cactus_cover, lemma0_cover, planar_cover
from .decomposition import AnnulusDecomposition, ChainPartition, annuli, chain_partition
from .graph import Graph, InputError, Subspace, components, set_diameter, sssp
from .theta import (
    FatnessWitness, ThetaCurve, ThetaSearch, check_annulus_theta_free, find_fat_theta, is_fat, max_fatness,
)
from .verify import CoverReport, multiplicity_at, separation_check, verify_cover

__version__ = "0.1.0"
