"""Initialize tests package"""
