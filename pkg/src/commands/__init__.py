# Commands Package
