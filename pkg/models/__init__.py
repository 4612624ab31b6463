"""
Value types and input records.
"""
