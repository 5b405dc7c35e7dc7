x = input()
print("Reverse: {}".format(int(x[::-1])))
print("Sum: {}".format(int(x) + int(x[::-1])))
