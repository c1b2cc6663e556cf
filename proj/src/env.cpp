namespace tagman {}
