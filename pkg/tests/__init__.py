"""
测试模块
""" 