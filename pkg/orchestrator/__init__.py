"""
Verification checks, the verify orchestrator and the shared tools.
"""
