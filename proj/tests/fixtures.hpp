#pragma once

// Shared source fixtures. kIoSample is the classic textbook echo
// program; kStackProgram/kStackLibrary are the stack client and the
// stack class it reuses. The frozen counts in the tests were tallied by
// hand against the cpp-thesis counting rules.

inline const char* kIoSample = R"(#include <iostream.h>

void main () {
int X;
cin >> X;
cout<< X+5;
}
)";

inline const char* kStackProgram = R"(#include <iostream.h>
#include "Stack.h";
int main()
{
Stack<int> s;
int stackSize;
cout<<"Enter Stack Size:";
cin>>stackSize;
for(int i = 0; i < stackSize; i++)
s.push(i);
while(!s.isEmpty())
cout << s.Pop() << endl;
return 0;
}
)";

inline const char* kStackLibrary = R"(Stack:: Stack()
{ topOfStack = -1; }
bool Stack::isEmpty()
{ return topOfStack == -1; }
bool Stack:: isFull()
{ return topOfStack == SIZE - 1; }
void Stack::makeEmpty()
{ topOfStack = -1; }
int Stack::pop()
{ return theArray[topOfStack--]; }
void Stack::push(int & x)
{ theArray[++topOfStack] = x; }
)";
