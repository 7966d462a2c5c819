"""Exact polyhedral cones, and a verifier for the effective cone of M_{0,6}."""
from .cone import Cone, LatticeVector, cones_dual_pair, dual_cone, extremal_rays, member

__all__ = ["Cone", "LatticeVector", "cones_dual_pair", "dual_cone", "extremal_rays", "member"]
