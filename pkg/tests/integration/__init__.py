"""Integration tests package"""
