"""Factored lifts of combined voltage graphs over Z_m and their spectra"""
