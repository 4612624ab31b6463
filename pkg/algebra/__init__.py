"""
Exact algebra for finitely generated abelian groups, types and skeletal models.
"""
